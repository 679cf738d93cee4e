"""Isolated execution of candidate programs and outcome-matrix assembly.

Each (program, input) cell gets its own fresh runner subprocess, killed as a
process group at the wall-clock budget. Runner misbehavior (garbage on stdout,
nonzero exit) is charged to the candidate, not the harness; only spawn
failures abort the run.
"""

from __future__ import annotations

import json
import os
import signal
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Optional

from . import canon
from .codegen import GeneratedProgram
from .fuzz import TestInput

DEFAULT_BUDGET = 5.0
GRACE = 1.0


def default_runner_cmd() -> list[str]:
    # -S -E keeps per-cell interpreter startup cheap; the runner and candidate
    # sources only need the stdlib.
    shim = os.path.join(os.path.dirname(os.path.abspath(__file__)), "runner.py")
    return [sys.executable, "-S", "-E", shim]


@dataclass(frozen=True)
class ExecutionOutcome:
    status: str  # "value" | "raised" | "timeout" | "unrunnable"
    value: Any = None
    kind: str = ""
    reason: str = ""

    def agrees_with(self, other: "ExecutionOutcome") -> bool:
        """Agreement rule: equal values, or both raised, or both timed out."""
        if self.status == "unrunnable" or other.status == "unrunnable":
            return False
        if self.status != other.status:
            return False
        if self.status == "value":
            return canon.equal(self.value, other.value)
        return True  # raised/raised (any kinds) or timeout/timeout

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == "value":
            out["value"] = canon._encode(self.value)
        if self.kind:
            out["kind"] = self.kind
        if self.reason:
            out["reason"] = self.reason
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ExecutionOutcome":
        return cls(
            status=data["status"],
            value=canon._decode(data["value"]) if "value" in data else None,
            kind=data.get("kind", ""),
            reason=data.get("reason", ""),
        )


@dataclass
class OutcomeMatrix:
    """Per-(program, input) outcomes; row 0 is the target."""

    programs: list[GeneratedProgram]
    inputs: list[TestInput]
    cells: list[list[ExecutionOutcome]]

    @property
    def target_row(self) -> list[ExecutionOutcome]:
        return self.cells[0]

    @property
    def paraphrase_rows(self) -> list[list[ExecutionOutcome]]:
        return self.cells[1:]


def execute(prog: GeneratedProgram, test_input: TestInput,
            budget: float = DEFAULT_BUDGET,
            runner_cmd: Optional[list[str]] = None) -> ExecutionOutcome:
    """Run one program on one input in a fresh runner subprocess."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    if prog.unrunnable:
        return ExecutionOutcome(status="unrunnable", reason=prog.unrunnable_reason or "")

    request = json.dumps({
        "source": prog.source,
        "entry_point": prog.entry_point,
        "args": canon._encode(list(test_input.args)),
    }, sort_keys=True, separators=(",", ":"))

    proc = subprocess.Popen(
        runner_cmd or default_runner_cmd(),
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        text=True,
        start_new_session=True,
    )
    try:
        stdout, _ = proc.communicate(request + "\n", timeout=budget)
    except subprocess.TimeoutExpired:
        _kill_group(proc)
        proc.communicate()
        return ExecutionOutcome(status="timeout")

    line = stdout.splitlines()[0] if stdout.strip() else ""
    try:
        reply = json.loads(line)
        status = reply["status"]
    except (ValueError, KeyError, TypeError):
        return ExecutionOutcome(
            status="unrunnable",
            reason="runner protocol error (exit %s)" % proc.returncode,
        )
    if status == "value":
        return ExecutionOutcome(status="value", value=canon._decode(reply["value"]))
    if status == "raised":
        return ExecutionOutcome(status="raised", kind=reply.get("kind", ""))
    if status == "load_error":
        return ExecutionOutcome(
            status="unrunnable",
            kind=reply.get("kind", ""),
            reason=reply.get("message", ""),
        )
    return ExecutionOutcome(status="unrunnable", reason="unknown runner status %r" % status)


def _kill_group(proc: subprocess.Popen) -> None:
    try:
        os.killpg(os.getpgid(proc.pid), signal.SIGKILL)
    except (ProcessLookupError, PermissionError):
        proc.kill()


def fill_matrix(target: GeneratedProgram, paras: list[GeneratedProgram],
                suite: list[TestInput], budget: float = DEFAULT_BUDGET,
                runner_cmd: Optional[list[str]] = None,
                workers: int = 4) -> OutcomeMatrix:
    """Execute every (program, input) pair; unrunnable programs never spawn."""
    if not suite:
        raise ValueError("test suite must be nonempty")
    programs = [target] + paras
    cells: list[list[Optional[ExecutionOutcome]]] = [
        [None] * len(suite) for _ in programs
    ]

    jobs = []
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for pi, prog in enumerate(programs):
            for ii, ti in enumerate(suite):
                jobs.append((pi, ii, pool.submit(execute, prog, ti, budget, runner_cmd)))
        for pi, ii, fut in jobs:
            cells[pi][ii] = fut.result()

    return OutcomeMatrix(programs=programs, inputs=suite, cells=cells)  # type: ignore[arg-type]
