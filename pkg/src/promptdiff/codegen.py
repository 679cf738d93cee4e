"""Turn a prompt into an executable candidate program via the backend."""

from __future__ import annotations

import ast
import logging
import re
from dataclasses import dataclass
from typing import Optional

from .llm import Backend, GenerationRequest
from .prompts import MalformedPrompt, parse_prompt

log = logging.getLogger(__name__)

CODEGEN_INSTRUCTION = "Can you generate python code for the following function?"

RETRY_OFFSET = 100

_FENCE_RE = re.compile(r"```[a-zA-Z0-9_+-]*\n(.*?)```", re.DOTALL)


class ExtractionFailure(Exception):
    """No code block found and the completion is not a parseable program."""


class MissingEntryPoint(Exception):
    """Extracted code parses but never defines the expected function."""


@dataclass
class GeneratedProgram:
    source: str
    origin: str  # "target" | "paraphrase"
    para_index: Optional[int]
    prompt_digest: str
    entry_point: str
    unrunnable_reason: Optional[str] = None

    @property
    def unrunnable(self) -> bool:
        return self.unrunnable_reason is not None


def _defines(source: str, entry_point: str) -> bool:
    try:
        tree = ast.parse(source)
    except SyntaxError:
        return False
    return any(
        isinstance(n, (ast.FunctionDef, ast.AsyncFunctionDef)) and n.name == entry_point
        for n in ast.walk(tree)
    )


def extract_code(completion: str, entry_point: str) -> str:
    """Pull program text out of a completion without reformatting it.

    Preference order: first fenced block defining the entry point, then any
    fenced block, then the completion itself if it parses as Python.
    """
    blocks = _FENCE_RE.findall(completion)
    for block in blocks:
        if _defines(block, entry_point):
            return block
    if blocks:
        return blocks[0]
    try:
        ast.parse(completion)
    except SyntaxError as exc:
        raise ExtractionFailure("completion is neither fenced nor parseable: %s" % exc)
    return completion


def _with_imports(source: str, import_lines: tuple[str, ...]) -> str:
    missing = [ln for ln in import_lines if ln.strip() not in source]
    if not missing:
        return source
    return "\n".join(missing) + "\n" + source


def generate_program(prompt: str, origin: str, entry_point: str, backend: Backend,
                     model_name: str, para_index: Optional[int] = None,
                     sample_index: int = 0) -> GeneratedProgram:
    """Request one implementation of the prompt and sanity-check it.

    One regeneration is attempted on extraction failure or a missing entry
    point; after that the program is marked unrunnable so the validator can
    still count it (it disagrees on every input).
    """
    try:
        spec = parse_prompt(prompt)
    except MalformedPrompt:
        raise
    req = GenerationRequest(
        model_name=model_name,
        instruction_prefix=CODEGEN_INSTRUCTION,
        body=prompt,
        sample_index=sample_index,
    )
    source, reason = _attempt(req, backend, entry_point, spec.imports)
    if reason is not None:
        retry = GenerationRequest(
            model_name=model_name,
            instruction_prefix=CODEGEN_INSTRUCTION,
            body=prompt,
            sample_index=sample_index + RETRY_OFFSET,
        )
        source, reason = _attempt(retry, backend, entry_point, spec.imports)
        if reason is not None:
            log.warning("codegen failed twice for %s (%s): %s", entry_point, origin, reason)
    return GeneratedProgram(
        source=source or "",
        origin=origin,
        para_index=para_index,
        prompt_digest=req.digest(),
        entry_point=entry_point,
        unrunnable_reason=reason,
    )


def _attempt(req: GenerationRequest, backend: Backend, entry_point: str,
             import_lines: tuple[str, ...]) -> tuple[Optional[str], Optional[str]]:
    completion = backend.generate(req).text
    try:
        code = extract_code(completion, entry_point)
    except ExtractionFailure as exc:
        return None, str(exc)
    if not _defines(code, entry_point):
        return code, "entry point %r not defined" % entry_point
    return _with_imports(code, import_lines), None
