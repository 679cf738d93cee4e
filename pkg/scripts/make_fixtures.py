#!/usr/bin/env python3
"""Regenerate the replay fixtures used by the end-to-end tests.

Covers the first 10 corpus tasks with engineered behaviors:
  - agree:       every generated program is correct -> no flag
  - fp_cluster:  correct target, five wrong-but-identical paraphrase
                 programs -> flagged despite a correct target
  - fn_shared:   all six programs share the same wrong semantics -> no flag
                 despite a wrong target

Outputs tests/data/fixtures.jsonl plus the 8-task and 10-task corpus slices.
"""

from __future__ import annotations

import json
import os

from promptdiff.codegen import CODEGEN_INSTRUCTION
from promptdiff.llm import DEFAULT_MODEL, GenerationRequest
from promptdiff.paraphrase import PARAPHRASE_INSTRUCTION
from promptdiff.prompts import iter_corpus, parse_prompt, reassemble

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "tests", "data")

CORRECT = {
    "rolling_max": (
        "def rolling_max(numbers):\n    out = []\n    cur = None\n"
        "    for n in numbers:\n        cur = n if cur is None else max(cur, n)\n"
        "        out.append(cur)\n    return out\n"
    ),
    "add": "def add(a, b):\n    return a + b\n",
    "is_palindrome": "def is_palindrome(text):\n    return text == text[::-1]\n",
    "factorial": (
        "def factorial(n):\n    out = 1\n    for i in range(2, n + 1):\n"
        "        out *= i\n    return out\n"
    ),
    "sum_list": "def sum_list(numbers):\n    return sum(numbers)\n",
    "count_vowels": (
        "def count_vowels(s):\n    return sum(1 for ch in s if ch in 'aeiou')\n"
    ),
    "reverse_words": (
        "def reverse_words(s):\n    return ' '.join(reversed(s.split()))\n"
    ),
    "unique_sorted": "def unique_sorted(xs):\n    return sorted(set(xs))\n",
    "interleave": (
        "def interleave(a, b):\n    out = []\n    for x, y in zip(a, b):\n"
        "        out.extend([x, y])\n"
        "    longer = a if len(a) > len(b) else b\n"
        "    out.extend(longer[min(len(a), len(b)):])\n    return out\n"
    ),
    "clamp": "def clamp(x, lo, hi):\n    return max(lo, min(hi, x))\n",
}

WRONG = {
    # rolling minimum instead of rolling maximum
    "rolling_max": (
        "def rolling_max(numbers):\n    out = []\n    cur = None\n"
        "    for n in numbers:\n        cur = n if cur is None else min(cur, n)\n"
        "        out.append(cur)\n    return out\n"
    ),
    # keeps first occurrences in input order instead of sorting
    "unique_sorted": (
        "def unique_sorted(xs):\n    out = []\n    for x in xs:\n"
        "        if x not in out:\n            out.append(x)\n    return out\n"
    ),
    # off-by-one range: factorial(4) == 6
    "factorial": (
        "def factorial(n):\n    out = 1\n    for i in range(1, n):\n"
        "        out *= i\n    return out\n"
    ),
    # reverses characters, not words
    "reverse_words": "def reverse_words(s):\n    return s[::-1]\n",
}

SCENARIOS = {
    "Fixture/0": "fp_cluster",   # rolling_max
    "Fixture/1": "agree",        # add
    "Fixture/2": "agree",        # is_palindrome
    "Fixture/3": "fn_shared",    # factorial
    "Fixture/4": "agree",        # sum_list
    "Fixture/5": "agree",        # count_vowels
    "Fixture/6": "fn_shared",    # reverse_words
    "Fixture/7": "fp_cluster",   # unique_sorted
    "Fixture/8": "agree",        # interleave
    "Fixture/9": "agree",        # clamp
}

K = 5

REWORDINGS = [
    "Put differently: {d}",
    "In other words, here is the goal. {d}",
    "Task restated. {d}",
    "The function should behave as follows. {d}",
    "Equivalently described: {d}",
]


def fenced(code: str) -> str:
    return "Here is the implementation:\n\n```python\n%s```\n" % code


def main() -> None:
    entries = list(iter_corpus(os.path.join(DATA, "corpus.jsonl")))[:10]
    fixtures = []

    def put(req: GenerationRequest, text: str) -> None:
        fixtures.append({
            "digest": req.digest(),
            "request_echo": {
                "instruction_prefix": req.instruction_prefix,
                "sample_index": req.sample_index,
            },
            "text": text,
        })

    for entry in entries:
        task_id = entry["task_id"]
        scenario = SCENARIOS[task_id]
        spec = parse_prompt(entry["prompt"], task_id)
        ep = entry["entry_point"]

        para_texts = [
            REWORDINGS[i].format(d=spec.description.replace("\n", " "))
            for i in range(K)
        ]
        for i, text in enumerate(para_texts):
            put(GenerationRequest(DEFAULT_MODEL, PARAPHRASE_INSTRUCTION,
                                  spec.description, sample_index=i), text)

        target_code = WRONG[ep] if scenario == "fn_shared" else CORRECT[ep]
        put(GenerationRequest(DEFAULT_MODEL, CODEGEN_INSTRUCTION, spec.raw,
                              sample_index=0), fenced(target_code))

        para_code = CORRECT[ep] if scenario == "agree" else WRONG[ep]
        for i, text in enumerate(para_texts):
            variant = reassemble(spec, text.strip("\n"))
            put(GenerationRequest(DEFAULT_MODEL, CODEGEN_INSTRUCTION, variant,
                                  sample_index=i + 1), fenced(para_code))

        # repeat-prompt ablation: the same prompt at sample_index 1..K keeps
        # producing the target's code
        for i in range(K):
            put(GenerationRequest(DEFAULT_MODEL, CODEGEN_INSTRUCTION, spec.raw,
                                  sample_index=i + 1), fenced(target_code))

    with open(os.path.join(DATA, "fixtures.jsonl"), "w", encoding="utf-8") as fh:
        for rec in fixtures:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

    for n, name in ((8, "corpus8.jsonl"), (10, "corpus10.jsonl")):
        with open(os.path.join(DATA, name), "w", encoding="utf-8") as fh:
            for entry in entries[:n]:
                fh.write(json.dumps(entry, sort_keys=True) + "\n")

    print("wrote %d fixture records" % len(fixtures))


if __name__ == "__main__":
    main()
