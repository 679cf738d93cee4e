"""Majority-vote cross validation of a target program against its paraphrases.

A paraphrase lands in the diff set when it disagrees with the target on at
least one comparable input; the target is flagged erroneous when the diff set
holds a strict majority (or, in conservative mode, is merely nonempty).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .executor import OutcomeMatrix

MAJORITY = "majority"
CONSERVATIVE = "conservative"


@dataclass
class Verdict:
    error_flag: bool
    diff_set: frozenset[int]  # paraphrase indices, 0-based
    mode: str
    # per (paraphrase, input): True=agree, False=disagree, None=input excluded
    per_cell_agreement: list[list[Optional[bool]]] = field(default_factory=list)
    indeterminate: bool = False

    def to_json(self) -> dict:
        return {
            "error_flag": self.error_flag,
            "diff_set": sorted(self.diff_set),
            "mode": self.mode,
            "indeterminate": self.indeterminate,
            "per_cell_agreement": self.per_cell_agreement,
        }


def cross_validate(matrix: OutcomeMatrix, mode: str = MAJORITY) -> Verdict:
    """Apply the cross-validation rule to a complete outcome matrix.

    Inputs where the target raised or timed out are excluded: they likely
    violate the prompt's input domain, so disagreement there proves nothing.
    If every input is excluded the verdict is indeterminate.
    """
    if mode not in (MAJORITY, CONSERVATIVE):
        raise ValueError("unknown mode %r" % mode)
    paras = matrix.paraphrase_rows
    if not paras:
        raise ValueError("need at least one paraphrase row")
    target = matrix.target_row

    comparable = [out.status not in ("raised", "timeout") for out in target]
    agreement: list[list[Optional[bool]]] = []
    diff = set()
    for k, row in enumerate(paras):
        cells: list[Optional[bool]] = []
        for i, out in enumerate(row):
            if not comparable[i]:
                cells.append(None)
                continue
            ok = target[i].agrees_with(out)
            cells.append(ok)
            if not ok:
                diff.add(k)
        agreement.append(cells)

    if not any(comparable):
        return Verdict(error_flag=False, diff_set=frozenset(), mode=mode,
                       per_cell_agreement=agreement, indeterminate=True)

    if mode == MAJORITY:
        flag = len(diff) > len(paras) / 2
    else:
        flag = bool(diff)
    return Verdict(error_flag=flag, diff_set=frozenset(diff), mode=mode,
                   per_cell_agreement=agreement)
