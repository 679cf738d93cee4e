"""Decompose benchmark prompts into imports / signature / description / examples.

Only the description is ever rewritten; the other three parts must survive
byte-for-byte, so parsing records the exact character span of the description
region inside the original text and reassembly splices into that span.
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass, field
from typing import Iterator, Optional


class MalformedPrompt(Exception):
    """The prompt cannot be decomposed (no function header, bad docstring)."""


# ---------------------------------------------------------------------------
# Type expressions


_SCALARS = {"int", "float", "bool", "str"}


@dataclass(frozen=True)
class TypeExpr:
    """Recursive type tree driving test-input generation.

    ``kind`` is one of ``int float bool str list tuple optional dict any``,
    or ``unsupported`` (carrying the original annotation text in ``text``).
    """

    kind: str
    args: tuple["TypeExpr", ...] = ()
    text: str = ""

    def render(self) -> str:
        if self.kind in _SCALARS:
            return self.kind
        if self.kind == "any":
            return "Any"
        if self.kind == "list":
            return "List[%s]" % self.args[0].render()
        if self.kind == "tuple":
            return "Tuple[%s]" % ", ".join(a.render() for a in self.args)
        if self.kind == "optional":
            return "Optional[%s]" % self.args[0].render()
        if self.kind == "dict":
            return "Dict[%s, %s]" % (self.args[0].render(), self.args[1].render())
        return self.text

    @property
    def supported(self) -> bool:
        if self.kind == "unsupported":
            return False
        return all(a.supported for a in self.args)


ANY = TypeExpr("any")


def parse_type(annotation: str) -> TypeExpr:
    """Parse an annotation string; unknown shapes become ``unsupported``."""
    try:
        node = ast.parse(annotation.strip(), mode="eval").body
    except SyntaxError:
        return TypeExpr("unsupported", text=annotation.strip())
    return _type_from_node(node, annotation.strip())


def _tail_name(node: ast.expr) -> Optional[str]:
    if isinstance(node, ast.Name):
        return node.id
    if isinstance(node, ast.Attribute):
        return node.attr
    return None


def _type_from_node(node: ast.expr, text: str) -> TypeExpr:
    name = _tail_name(node)
    if name is not None:
        lowered = name.lower()
        if lowered in _SCALARS:
            return TypeExpr(lowered)
        if lowered == "any":
            return ANY
        if lowered == "list":
            return TypeExpr("list", (ANY,))
        if lowered == "tuple":
            return TypeExpr("tuple", (ANY,))
        if lowered == "dict":
            return TypeExpr("dict", (ANY, ANY))
        if name == "None":
            return TypeExpr("unsupported", text=text)
        return TypeExpr("unsupported", text=text)
    if isinstance(node, ast.Constant) and node.value is None:
        return TypeExpr("unsupported", text=text)
    if isinstance(node, ast.Subscript):
        base = _tail_name(node.value)
        inner = node.slice
        elems = list(inner.elts) if isinstance(inner, ast.Tuple) else [inner]
        args = tuple(_type_from_node(e, ast.unparse(e)) for e in elems)
        if base is None:
            return TypeExpr("unsupported", text=text)
        lowered = base.lower()
        if lowered == "list" and len(args) == 1:
            return TypeExpr("list", args)
        if lowered == "tuple":
            return TypeExpr("tuple", args)
        if lowered == "optional" and len(args) == 1:
            return TypeExpr("optional", args)
        if lowered == "dict" and len(args) == 2:
            return TypeExpr("dict", args)
        if lowered == "union":
            nones = [e for e in elems if isinstance(e, ast.Constant) and e.value is None]
            rest = [a for e, a in zip(elems, args) if e not in nones]
            if len(nones) == 1 and len(rest) == 1:
                return TypeExpr("optional", tuple(rest))
            return TypeExpr("unsupported", text=text)
    return TypeExpr("unsupported", text=text)


# ---------------------------------------------------------------------------
# Prompt model


@dataclass(frozen=True)
class FunctionSignature:
    entry_point: str
    params: tuple[tuple[str, TypeExpr], ...]
    return_type: Optional[TypeExpr]


@dataclass(frozen=True)
class PromptSpec:
    task_id: str
    imports: tuple[str, ...]
    signature: FunctionSignature
    description: str
    examples: str
    raw: str
    # description region bookkeeping for byte-exact splicing
    desc_span: tuple[int, int] = field(default=(0, 0), repr=False)
    desc_lead: str = field(default="", repr=False)
    desc_tail: str = field(default="", repr=False)
    desc_indent: str = field(default="", repr=False)
    desc_inline: bool = field(default=False, repr=False)


_QUOTE_RE = re.compile(r'^[rRuUbBfF]{0,2}("""|\'\'\'|"|\')')


def parse_prompt(raw: str, task_id: str = "") -> PromptSpec:
    """Split a prompt into its four parts, recording the description span."""
    try:
        tree = ast.parse(raw)
    except SyntaxError as exc:
        raise MalformedPrompt("prompt is not parseable: %s" % exc) from exc

    defs = [n for n in tree.body if isinstance(n, (ast.FunctionDef, ast.AsyncFunctionDef))]
    if len(defs) != 1:
        raise MalformedPrompt("expected exactly one function definition, found %d" % len(defs))
    fn = defs[0]
    if not (
        fn.body
        and isinstance(fn.body[0], ast.Expr)
        and isinstance(fn.body[0].value, ast.Constant)
        and isinstance(fn.body[0].value.value, str)
    ):
        raise MalformedPrompt("function has no docstring")
    doc = fn.body[0].value

    line_starts = _line_starts(raw)
    doc_start = line_starts[doc.lineno - 1] + doc.col_offset
    doc_end = line_starts[doc.end_lineno - 1] + doc.end_col_offset
    literal = raw[doc_start:doc_end]
    m = _QUOTE_RE.match(literal)
    if m is None:
        raise MalformedPrompt("unrecognized docstring literal")
    quote = m.group(1)
    inner_start = doc_start + m.end()
    inner_end = doc_end - len(quote)

    examples_start = inner_end
    pos = inner_start
    for line in raw[inner_start:inner_end].splitlines(keepends=True):
        if line.lstrip().startswith(">>>"):
            examples_start = pos
            break
        pos += len(line)

    span = raw[inner_start:examples_start]
    inline = inner_start > 0 and raw[inner_start - 1] != "\n"
    lead, core, tail, indent, inline_first = _split_description(
        span, default_indent=" " * doc.col_offset, inline=inline)
    desc_lines = []
    for i, ln in enumerate(core):
        if i == 0 and inline_first:
            desc_lines.append(ln.lstrip())
        elif ln.strip():
            desc_lines.append(ln[len(indent):])
        else:
            desc_lines.append(ln)
    description = "\n".join(desc_lines)

    imports = tuple(
        ln for ln in raw[: line_starts[fn.lineno - 1]].splitlines()
        if ln.strip().startswith(("import ", "from "))
    )
    params = tuple(
        (a.arg, parse_type(ast.unparse(a.annotation)) if a.annotation else ANY)
        for a in (fn.args.posonlyargs + fn.args.args)
    )
    ret = parse_type(ast.unparse(fn.returns)) if fn.returns else None

    return PromptSpec(
        task_id=task_id,
        imports=imports,
        signature=FunctionSignature(fn.name, params, ret),
        description=description,
        examples=raw[examples_start:inner_end],
        raw=raw,
        desc_span=(inner_start, examples_start),
        desc_lead=lead,
        desc_tail=tail,
        desc_indent=indent,
        desc_inline=inline_first,
    )


def _line_starts(text: str) -> list[int]:
    starts = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            starts.append(i + 1)
    return starts


def _split_description(
    span: str, default_indent: str, inline: bool
) -> tuple[str, list[str], str, str, bool]:
    """Split the raw description span into lead / core lines / tail / indent.

    When the description begins on the opening-quote line, its first line is
    dedented by lstrip (the stripped run moves into the lead) and the indent is
    inferred from the remaining lines only.
    """
    lines = span.split("\n")
    content = [i for i, ln in enumerate(lines) if ln.strip()]
    if not content:
        return span, [], "", default_indent, False
    first, last = content[0], content[-1]
    core = lines[first:last + 1]
    lead = "\n".join(lines[:first]) + ("\n" if first > 0 else "")
    tail = ("\n" if last + 1 < len(lines) else "") + "\n".join(lines[last + 1:])
    inline_first = inline and first == 0
    indent_lines = [ln for ln in core[1 if inline_first else 0:] if ln.strip()]
    if inline_first:
        stripped = core[0].lstrip()
        lead += core[0][: len(core[0]) - len(stripped)]
    indent = _common_indent(indent_lines) if indent_lines else default_indent
    return lead, core, tail, indent, inline_first


def _common_indent(lines: list[str]) -> str:
    prefixes = []
    for ln in lines:
        stripped = ln.lstrip()
        prefixes.append(ln[: len(ln) - len(stripped)])
    out = prefixes[0]
    for p in prefixes[1:]:
        while not p.startswith(out):
            out = out[:-1]
    return out


def reassemble(spec: PromptSpec, new_description: str) -> str:
    """Splice a new description into the prompt, leaving every other byte alone."""
    start, end = spec.desc_span
    out_lines = []
    for i, ln in enumerate(new_description.split("\n")):
        if (i == 0 and spec.desc_inline) or not ln.strip():
            out_lines.append(ln)
        else:
            out_lines.append(spec.desc_indent + ln)
    rendered = "\n".join(out_lines)
    if not spec.description and rendered:
        rendered += "\n"
    body = spec.desc_lead + rendered + spec.desc_tail
    return spec.raw[:start] + body + spec.raw[end:]


def lint_prompt(spec: PromptSpec) -> list[str]:
    """Report spots where the description/examples boundary heuristic is shaky."""
    warnings = []
    lines = spec.examples.split("\n")
    seen_blank_after_example = False
    for ln in lines:
        stripped = ln.strip()
        if not stripped:
            seen_blank_after_example = True
            continue
        if stripped.startswith(">>>"):
            seen_blank_after_example = False
            continue
        if seen_blank_after_example:
            warnings.append("possible prose inside examples block: %r" % stripped)
            seen_blank_after_example = False
    return warnings


# ---------------------------------------------------------------------------
# Corpus I/O (JSON-Lines, HumanEval public schema)


def iter_corpus(path: str) -> Iterator[dict]:
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)
