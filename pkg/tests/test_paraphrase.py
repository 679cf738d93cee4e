import pytest

from promptdiff.llm import GenerationResponse
from promptdiff.paraphrase import PARAPHRASE_INSTRUCTION, make_paraphrases
from promptdiff.prompts import parse_prompt

from test_prompts import ROLLING_MAX


class ScriptedBackend:
    """Returns queued texts in order; records every request."""

    def __init__(self, texts):
        self.texts = list(texts)
        self.requests = []

    def generate(self, req):
        self.requests.append(req)
        return GenerationResponse(text=self.texts.pop(0), source="replay")


def spec():
    return parse_prompt(ROLLING_MAX, "T/9")


def test_instruction_prefix_is_exact():
    backend = ScriptedBackend(["Alpha."])
    make_paraphrases(spec(), 1, backend, "m")
    assert backend.requests[0].instruction_prefix == \
        "Can you paraphrase the following paragraph?"
    assert PARAPHRASE_INSTRUCTION == "Can you paraphrase the following paragraph?"
    assert backend.requests[0].body == spec().description


def test_k_requests_have_distinct_digests():
    backend = ScriptedBackend(["A.", "B.", "C.", "D.", "E."])
    make_paraphrases(spec(), 5, backend, "m")
    assert len({r.digest() for r in backend.requests}) == 5
    assert [r.sample_index for r in backend.requests] == [0, 1, 2, 3, 4]


def test_identity_paraphrase_reproduces_raw():
    s = spec()
    backend = ScriptedBackend([s.description])
    pset = make_paraphrases(s, 1, backend, "m")
    assert pset.variants == [s.raw]


def test_structural_preservation():
    backend = ScriptedBackend(["Track the running peak.", "Keep the max so far."])
    pset = make_paraphrases(spec(), 2, backend, "m")
    for v in pset.variants:
        got = parse_prompt(v)
        assert got.imports == spec().imports
        assert got.signature == spec().signature
        assert got.examples == spec().examples


def test_rejected_then_retry_succeeds():
    backend = ScriptedBackend(["```python\ncode\n```", "A real paraphrase."])
    pset = make_paraphrases(spec(), 1, backend, "m")
    assert "A real paraphrase." in pset.variants[0]
    assert pset.warnings == []
    assert len(backend.requests) == 2
    assert backend.requests[1].sample_index != backend.requests[0].sample_index


def test_double_rejection_falls_back_to_original():
    backend = ScriptedBackend(["", "def nope(): pass"])
    s = spec()
    pset = make_paraphrases(s, 1, backend, "m")
    assert pset.variants == [s.raw]
    assert len(pset.warnings) == 1


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        make_paraphrases(spec(), 0, ScriptedBackend([]), "m")
