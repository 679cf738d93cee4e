#!/usr/bin/env python3
"""Regenerate tests/data/corpus.jsonl, a 164-task benchmark-style corpus.

Each record follows the public schema {task_id, prompt, entry_point,
canonical_solution, test}. Prompts are composed from a pool of base functions
crossed with formatting styles (quote style, inline vs. block description,
examples present or absent, extra imports) so the parser round-trip is
exercised on varied shapes. Ground truth is derived by running the reference
implementation on fixed probe inputs at generation time.
"""

from __future__ import annotations

import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "tests", "data", "corpus.jsonl")


def ref_rolling_max(numbers):
    out, cur = [], None
    for n in numbers:
        cur = n if cur is None else max(cur, n)
        out.append(cur)
    return out


def ref_add(a, b):
    return a + b


def ref_is_palindrome(text):
    return text == text[::-1]


def ref_factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def ref_sum_list(numbers):
    return sum(numbers)


def ref_count_vowels(s):
    return sum(1 for ch in s if ch in "aeiou")


def ref_reverse_words(s):
    return " ".join(reversed(s.split()))


def ref_unique_sorted(xs):
    return sorted(set(xs))


def ref_interleave(a, b):
    out = []
    for x, y in zip(a, b):
        out.extend([x, y])
    longer = a if len(a) > len(b) else b
    out.extend(longer[min(len(a), len(b)):])
    return out


def ref_clamp(x, lo, hi):
    return max(lo, min(hi, x))


def ref_char_freq(s):
    out = {}
    for ch in s:
        out[ch] = out.get(ch, 0) + 1
    return out


def ref_pairwise_sums(pairs):
    return [a + b for a, b in pairs]


def ref_maybe_head(xs):
    return xs[0] if xs else None


def ref_fizzbuzz_word(n):
    if n % 15 == 0:
        return "fizzbuzz"
    if n % 3 == 0:
        return "fizz"
    if n % 5 == 0:
        return "buzz"
    return str(n)


def ref_longest_word(words):
    best = ""
    for w in words:
        if len(w) > len(best):
            best = w
    return best


def ref_running_sum(numbers):
    out, acc = [], 0
    for n in numbers:
        acc += n
        out.append(acc)
    return out


# (entry_point, imports, signature, description lines, examples lines, body, probes)
BASES = [
    (
        "rolling_max",
        "from typing import List, Tuple",
        "def rolling_max(numbers: List[int]) -> List[int]:",
        ["From a given list of integers, generate a list of rolling maximum",
         "element found until given moment in the sequence."],
        [">>> rolling_max([1, 2, 3, 2, 3, 4, 2])", "[1, 2, 3, 3, 3, 4, 4]"],
        "    out = []\n    cur = None\n    for n in numbers:\n"
        "        cur = n if cur is None else max(cur, n)\n        out.append(cur)\n"
        "    return out\n",
        ref_rolling_max,
        [([],), ([5],), ([1, 2, 3, 2, 3, 4, 2],), ([3, 1, 4, 1, 5],)],
    ),
    (
        "add",
        "",
        "def add(a: int, b: int) -> int:",
        ["Return the sum of the two given integers."],
        [">>> add(2, 3)", "5"],
        "    return a + b\n",
        ref_add,
        [(0, 0), (2, 3), (-4, 9)],
    ),
    (
        "is_palindrome",
        "",
        "def is_palindrome(text: str) -> bool:",
        ["Check whether the given string reads the same forwards",
         "and backwards."],
        [">>> is_palindrome('aba')", "True"],
        "    return text == text[::-1]\n",
        ref_is_palindrome,
        [("",), ("aba",), ("abc",), ("abba",)],
    ),
    (
        "factorial",
        "",
        "def factorial(n: int) -> int:",
        ["Compute the product of all positive integers up to n.",
         "The result for zero is one."],
        [">>> factorial(4)", "24"],
        "    out = 1\n    for i in range(2, n + 1):\n        out *= i\n    return out\n",
        ref_factorial,
        [(0,), (1,), (4,), (6,)],
    ),
    (
        "sum_list",
        "from typing import List",
        "def sum_list(numbers: List[int]) -> int:",
        ["Return the total of all integers in the list; an empty list",
         "sums to zero."],
        [">>> sum_list([1, 2, 3])", "6"],
        "    return sum(numbers)\n",
        ref_sum_list,
        [([],), ([1, 2, 3],), ([-1, 1],)],
    ),
    (
        "count_vowels",
        "",
        "def count_vowels(s: str) -> int:",
        ["Count how many characters of the string are lowercase vowels."],
        [">>> count_vowels('banana')", "3"],
        "    return sum(1 for ch in s if ch in 'aeiou')\n",
        ref_count_vowels,
        [("",), ("banana",), ("xyz",)],
    ),
    (
        "reverse_words",
        "",
        "def reverse_words(s: str) -> str:",
        ["Return the words of the sentence in reverse order, joined by",
         "single spaces."],
        [">>> reverse_words('the quick fox')", "'fox quick the'"],
        "    return ' '.join(reversed(s.split()))\n",
        ref_reverse_words,
        [("",), ("the quick fox",), ("one",)],
    ),
    (
        "unique_sorted",
        "from typing import List",
        "def unique_sorted(xs: List[int]) -> List[int]:",
        ["Return the distinct integers of the list in ascending order."],
        [">>> unique_sorted([3, 1, 3, 2])", "[1, 2, 3]"],
        "    return sorted(set(xs))\n",
        ref_unique_sorted,
        [([],), ([3, 1, 3, 2],), ([5, 5, 5],)],
    ),
    (
        "interleave",
        "from typing import List",
        "def interleave(a: List[int], b: List[int]) -> List[int]:",
        ["Alternate elements from the two lists; when one runs out, append",
         "the remainder of the other."],
        [">>> interleave([1, 3], [2, 4, 6])", "[1, 2, 3, 4, 6]"],
        "    out = []\n    for x, y in zip(a, b):\n        out.extend([x, y])\n"
        "    longer = a if len(a) > len(b) else b\n"
        "    out.extend(longer[min(len(a), len(b)):])\n    return out\n",
        ref_interleave,
        [([], []), ([1, 3], [2, 4, 6]), ([1], [])],
    ),
    (
        "clamp",
        "",
        "def clamp(x: float, lo: float, hi: float) -> float:",
        ["Restrict the value x into the closed interval from lo to hi."],
        [">>> clamp(5.0, 0.0, 2.0)", "2.0"],
        "    return max(lo, min(hi, x))\n",
        ref_clamp,
        [(5.0, 0.0, 2.0), (-1.0, 0.0, 2.0), (1.5, 0.0, 2.0)],
    ),
    (
        "char_freq",
        "from typing import Dict",
        "def char_freq(s: str) -> Dict[str, int]:",
        ["Build a mapping from each character of the string to the number",
         "of times it occurs."],
        [">>> char_freq('aab')", "{'a': 2, 'b': 1}"],
        "    out = {}\n    for ch in s:\n        out[ch] = out.get(ch, 0) + 1\n    return out\n",
        ref_char_freq,
        [("",), ("aab",), ("abcabc",)],
    ),
    (
        "pairwise_sums",
        "from typing import List, Tuple",
        "def pairwise_sums(pairs: List[Tuple[int, int]]) -> List[int]:",
        ["For every pair in the list, output the sum of its two members."],
        [">>> pairwise_sums([(1, 2), (3, 4)])", "[3, 7]"],
        "    return [a + b for a, b in pairs]\n",
        ref_pairwise_sums,
        [([],), ([(1, 2), (3, 4)],)],
    ),
    (
        "maybe_head",
        "from typing import List, Optional",
        "def maybe_head(xs: List[int]) -> Optional[int]:",
        ["Return the first element of the list, or None when the list",
         "is empty."],
        [">>> maybe_head([7, 8])", "7"],
        "    return xs[0] if xs else None\n",
        ref_maybe_head,
        [([],), ([7, 8],)],
    ),
    (
        "fizzbuzz_word",
        "",
        "def fizzbuzz_word(n: int) -> str:",
        ["Return 'fizz' for multiples of three, 'buzz' for multiples of",
         "five, 'fizzbuzz' for multiples of both, and the decimal digits",
         "of n otherwise."],
        [">>> fizzbuzz_word(6)", "'fizz'"],
        "    if n % 15 == 0:\n        return 'fizzbuzz'\n"
        "    if n % 3 == 0:\n        return 'fizz'\n"
        "    if n % 5 == 0:\n        return 'buzz'\n    return str(n)\n",
        ref_fizzbuzz_word,
        [(6,), (10,), (30,), (7,)],
    ),
    (
        "longest_word",
        "from typing import List",
        "def longest_word(words: List[str]) -> str:",
        ["Pick the longest string from the list; ties go to the earliest",
         "one, and an empty list yields the empty string."],
        [">>> longest_word(['a', 'bbb', 'cc'])", "'bbb'"],
        "    best = ''\n    for w in words:\n        if len(w) > len(best):\n"
        "            best = w\n    return best\n",
        ref_longest_word,
        [([],), (["a", "bbb", "cc"],), (["xx", "yy"],)],
    ),
    (
        "running_sum",
        "from typing import List",
        "def running_sum(numbers: List[int]) -> List[int]:",
        ["Produce the list of prefix totals of the given integers."],
        [">>> running_sum([1, 2, 3])", "[1, 3, 6]"],
        "    out = []\n    acc = 0\n    for n in numbers:\n        acc += n\n"
        "        out.append(acc)\n    return out\n",
        ref_running_sum,
        [([],), ([1, 2, 3],), ([-1, 1, -1],)],
    ),
]


def style_prompt(style: int, imports: str, signature: str,
                 desc: list[str], examples: list[str]) -> str:
    """Render one prompt; styles vary quoting, layout and example presence."""
    quote = "'''" if style % 4 == 3 else '"""'
    with_examples = style % 3 != 2
    extra_import = "import math\n" if style % 5 == 4 else ""
    head = (extra_import + imports + "\n\n\n" if imports or extra_import else "")
    lines = [head + signature]
    indent = " " * 4
    if style % 2 == 0:
        # description starts on the opening-quote line
        lines.append(indent + quote + " " + desc[0])
        for d in desc[1:]:
            lines.append(indent + d)
    else:
        lines.append(indent + quote)
        for d in desc:
            lines.append(indent + d)
    if style % 7 == 6:
        lines.append("")  # blank line between description and examples
    if with_examples:
        for e in examples:
            lines.append(indent + e)
    lines.append(indent + quote)
    return "\n".join(lines) + "\n"


def make_test(ref, probes) -> str:
    lines = ["def check(candidate):"]
    for args in probes:
        expected = ref(*args)
        call = "candidate(%s)" % ", ".join(repr(a) for a in args)
        if isinstance(expected, float):
            lines.append("    assert abs(%s - %r) < 1e-6" % (call, expected))
        else:
            lines.append("    assert %s == %r" % (call, expected))
    return "\n".join(lines) + "\n"


def main() -> None:
    records = []
    n_styles = 11
    i = 0
    while len(records) < 164:
        base = BASES[i % len(BASES)]
        style = i // len(BASES)
        entry, imports, signature, desc, examples, body, ref, probes = base
        prompt = style_prompt(style % n_styles, imports, signature, desc, examples)
        records.append({
            "task_id": "Fixture/%d" % i,
            "prompt": prompt,
            "entry_point": entry,
            "canonical_solution": body,
            "test": make_test(ref, probes),
        })
        i += 1

    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    print("wrote %d records to %s" % (len(records), OUT))


if __name__ == "__main__":
    sys.exit(main())
