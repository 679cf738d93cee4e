"""Produce reworded prompt variants that touch nothing but the description."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .llm import Backend, GenerationRequest
from .prompts import PromptSpec, reassemble

log = logging.getLogger(__name__)

PARAPHRASE_INSTRUCTION = "Can you paraphrase the following paragraph?"

# sample_index namespace for the single retry after a rejected paraphrase
RETRY_OFFSET = 100


@dataclass
class ParaphraseSet:
    original: PromptSpec
    variants: list[str]
    k: int
    warnings: list[str] = field(default_factory=list)


def _rejected(text: str) -> bool:
    stripped = text.strip()
    if not stripped:
        return True
    # code instead of prose
    return "```" in stripped or stripped.startswith(("def ", "import ", "from "))


def make_paraphrases(spec: PromptSpec, k: int, backend: Backend,
                     model_name: str) -> ParaphraseSet:
    """Ask for k independent rewrites of the description and splice each back in.

    A rewrite that comes back empty or as code is retried once; if the retry is
    also rejected the slot falls back to the original description so the
    variant count stays at k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    variants = []
    warnings = []
    for i in range(k):
        req = GenerationRequest(
            model_name=model_name,
            instruction_prefix=PARAPHRASE_INSTRUCTION,
            body=spec.description,
            sample_index=i,
        )
        text = backend.generate(req).text
        if _rejected(text):
            retry = GenerationRequest(
                model_name=model_name,
                instruction_prefix=PARAPHRASE_INSTRUCTION,
                body=spec.description,
                sample_index=i + RETRY_OFFSET,
            )
            text = backend.generate(retry).text
            if _rejected(text):
                msg = "paraphrase %d rejected twice for %s; using original description" % (
                    i, spec.task_id)
                log.warning(msg)
                warnings.append(msg)
                text = spec.description
        variants.append(reassemble(spec, text.strip("\n")))
    return ParaphraseSet(original=spec, variants=variants, k=k, warnings=warnings)
