"""Ground-truth labeling and confusion-matrix metrics.

Only this module ever touches a corpus entry's canonical solution or test
code; the validation pipeline never does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .codegen import GeneratedProgram
from .executor import DEFAULT_BUDGET, execute
from .fuzz import TestInput
from .validator import Verdict

CORRECT = "correct"
ERRONEOUS = "erroneous"

# Note emitted with every report: the standard precision definition
# TP/(TP+FP) is used; it is the only one consistent with the reference
# result tables this module's golden tests pin down.
PRECISION_NOTE = "precision = TP/(TP+FP)"


class GroundTruthBroken(Exception):
    """The corpus's own reference solution fails its own tests."""


@dataclass(frozen=True)
class GroundTruthLabel:
    task_id: str
    label: str  # CORRECT | ERRONEOUS
    failure_kind: str = ""  # assertion_mismatch | runtime_error | timeout


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass
class MetricsReport:
    counts: ConfusionCounts
    accuracy: Optional[float]
    precision: Optional[float]
    recall: Optional[float]
    false_positive_rate: Optional[float]
    indeterminate_tasks: list[str] = field(default_factory=list)
    note: str = PRECISION_NOTE

    def to_json(self) -> dict:
        return {
            "note": self.note,
            "counts": {"tp": self.counts.tp, "fp": self.counts.fp,
                       "tn": self.counts.tn, "fn": self.counts.fn},
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "false_positive_rate": self.false_positive_rate,
            "indeterminate_tasks": self.indeterminate_tasks,
        }

    def render(self) -> str:
        def pct(x: Optional[float]) -> str:
            return "n/a" if x is None else "%.1f%%" % (100.0 * x)
        c = self.counts
        return (
            "tp=%d fp=%d tn=%d fn=%d | accuracy %s  recall %s  precision %s  fpr %s"
            % (c.tp, c.fp, c.tn, c.fn, pct(self.accuracy), pct(self.recall),
               pct(self.precision), pct(self.false_positive_rate))
        )


def _ratio(num: int, den: int) -> Optional[float]:
    return None if den == 0 else num / den


def metrics_from_counts(counts: ConfusionCounts,
                        indeterminate: Optional[list[str]] = None) -> MetricsReport:
    return MetricsReport(
        counts=counts,
        accuracy=_ratio(counts.tp + counts.tn, counts.total),
        precision=_ratio(counts.tp, counts.tp + counts.fp),
        recall=_ratio(counts.tp, counts.tp + counts.fn),
        false_positive_rate=_ratio(counts.fp, counts.fp + counts.tn),
        indeterminate_tasks=list(indeterminate or []),
    )


def _check_program(source: str, test_code: str, entry_point: str) -> GeneratedProgram:
    """Wrap candidate + corpus test code behind a zero-arg entry point."""
    harness = (
        source
        + "\n\n"
        + test_code
        + "\n\ndef __gt_check__():\n    check(%s)\n" % entry_point
    )
    return GeneratedProgram(
        source=harness, origin="ground-truth", para_index=None,
        prompt_digest="", entry_point="__gt_check__",
    )


def label_target(prog: GeneratedProgram, corpus_entry: dict,
                 budget: float = DEFAULT_BUDGET,
                 runner_cmd: Optional[list[str]] = None) -> GroundTruthLabel:
    """Run the corpus test set against the target program.

    Raises GroundTruthBroken if the corpus's reference solution does not pass
    its own tests (the task is then excluded from metrics).
    """
    task_id = corpus_entry["task_id"]
    test_code = corpus_entry["test"]
    entry_point = corpus_entry["entry_point"]
    no_args = TestInput(args=(), index=0)

    reference = corpus_entry["prompt"] + corpus_entry["canonical_solution"]
    ref_outcome = execute(_check_program(reference, test_code, entry_point),
                          no_args, budget, runner_cmd)
    if ref_outcome.status != "value":
        raise GroundTruthBroken(
            "%s: reference solution fails its tests (%s %s)"
            % (task_id, ref_outcome.status, ref_outcome.kind or ref_outcome.reason))

    if prog.unrunnable:
        return GroundTruthLabel(task_id, ERRONEOUS, "runtime_error")
    outcome = execute(_check_program(prog.source, test_code, entry_point),
                      no_args, budget, runner_cmd)
    if outcome.status == "value":
        return GroundTruthLabel(task_id, CORRECT)
    if outcome.status == "timeout":
        return GroundTruthLabel(task_id, ERRONEOUS, "timeout")
    if outcome.status == "raised" and outcome.kind == "AssertionError":
        return GroundTruthLabel(task_id, ERRONEOUS, "assertion_mismatch")
    return GroundTruthLabel(task_id, ERRONEOUS, "runtime_error")


def compute_metrics(labels: dict[str, GroundTruthLabel],
                    verdicts: dict[str, Verdict]) -> MetricsReport:
    """Tally the confusion matrix over all tasks carrying both a label and a
    verdict; indeterminate verdicts are excluded and listed separately."""
    tp = fp = tn = fn = 0
    indeterminate = []
    for task_id in sorted(set(labels) & set(verdicts)):
        verdict = verdicts[task_id]
        if verdict.indeterminate:
            indeterminate.append(task_id)
            continue
        truly_bad = labels[task_id].label == ERRONEOUS
        if verdict.error_flag:
            tp, fp = (tp + 1, fp) if truly_bad else (tp, fp + 1)
        else:
            fn, tn = (fn + 1, tn) if truly_bad else (fn, tn + 1)
    return metrics_from_counts(ConfusionCounts(tp, fp, tn, fn), indeterminate)
