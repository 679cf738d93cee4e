"""Differential validation of LLM-generated programs via paraphrased prompts.

Attribute access is lazy (PEP 562) so that the runner subprocess, which is
spawned once per executed cell, never pays for the heavier imports.
"""

__version__ = "0.1.0"

_EXPORTS = {
    "PromptSpec": "prompts",
    "FunctionSignature": "prompts",
    "TypeExpr": "prompts",
    "parse_prompt": "prompts",
    "reassemble": "prompts",
    "cross_validate": "validator",
    "Verdict": "validator",
    "MAJORITY": "validator",
    "CONSERVATIVE": "validator",
    "compute_metrics": "evaluation",
    "metrics_from_counts": "evaluation",
    "ConfusionCounts": "evaluation",
}

__all__ = list(_EXPORTS)


def __getattr__(name):
    if name in _EXPORTS:
        import importlib
        module = importlib.import_module("." + _EXPORTS[name], __name__)
        return getattr(module, name)
    raise AttributeError("module %r has no attribute %r" % (__name__, name))
