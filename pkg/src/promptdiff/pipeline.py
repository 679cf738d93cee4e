"""End-to-end orchestration: parse, paraphrase, generate, fuzz, execute, vote.

The validate path reads only {task_id, prompt, entry_point} from corpus
entries. Ground-truth fields (canonical_solution, test) are consumed solely by
the evaluate path.
"""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass, field, asdict
from typing import Optional

from . import canon
from .codegen import GeneratedProgram, generate_program
from .evaluation import (GroundTruthBroken, GroundTruthLabel, MetricsReport,
                         compute_metrics, label_target)
from .executor import ExecutionOutcome, OutcomeMatrix, fill_matrix
from .fuzz import FuzzConfig, TestInput, UnsupportedType, generate_inputs
from .llm import Backend, DEFAULT_MODEL
from .paraphrase import make_paraphrases
from .prompts import MalformedPrompt, parse_prompt
from .validator import MAJORITY, Verdict, cross_validate

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

ABLATION_NONE = "none"
ABLATION_REPEAT = "repeat-prompt"


@dataclass
class RunConfig:
    corpus: str = ""
    backend: str = "replay"  # "live" | "replay"
    fixtures: Optional[str] = None
    cache_dir: Optional[str] = None
    base_url: str = "https://api.openai.com/v1"
    model_name: str = DEFAULT_MODEL
    k: int = 5
    mode: str = MAJORITY
    ablation: str = ABLATION_NONE
    seed: int = 0
    max_inputs: int = 20
    budget: float = 5.0
    workers: int = 4
    output_dir: str = "out"
    runner_cmd: Optional[list[str]] = None
    allow_even_k: bool = False

    def check(self) -> None:
        if self.mode == MAJORITY and self.k % 2 == 0 and not self.allow_even_k:
            raise ValueError(
                "majority mode needs an odd paraphrase count (k=%d); "
                "pass allow_even_k to override" % self.k)


class MissingGroundTruth(Exception):
    """Corpus entries lack the fields evaluation needs."""


# ---------------------------------------------------------------------------
# validate


def validate_task(entry: dict, cfg: RunConfig, backend: Backend) -> dict:
    """Run the full per-task pipeline, returning a manifest record."""
    task_id = entry["task_id"]
    record: dict = {"task_id": task_id}
    try:
        spec = parse_prompt(entry["prompt"], task_id)
    except MalformedPrompt as exc:
        record.update(status="skipped", reason=str(exc))
        return record

    warnings: list[str] = []
    if cfg.ablation == ABLATION_REPEAT:
        variant_prompts = [spec.raw] * cfg.k
    else:
        pset = make_paraphrases(spec, cfg.k, backend, cfg.model_name)
        variant_prompts = pset.variants
        warnings.extend(pset.warnings)

    entry_point = entry["entry_point"]
    target = generate_program(spec.raw, "target", entry_point, backend,
                              cfg.model_name, sample_index=0)
    paras = [
        generate_program(p, "paraphrase", entry_point, backend, cfg.model_name,
                         para_index=i, sample_index=i + 1)
        for i, p in enumerate(variant_prompts)
    ]

    try:
        suite = generate_inputs(
            spec.signature,
            FuzzConfig(seed=cfg.seed, max_inputs=cfg.max_inputs),
        )
    except UnsupportedType as exc:
        record.update(status="not_validatable", reason=str(exc),
                      prompts=[spec.raw] + variant_prompts)
        return record

    matrix = fill_matrix(target, paras, suite, budget=cfg.budget,
                         runner_cmd=cfg.runner_cmd, workers=cfg.workers)
    verdict = cross_validate(matrix, cfg.mode)

    record.update(
        status="validated",
        prompts=[spec.raw] + variant_prompts,
        programs=[_program_json(p) for p in matrix.programs],
        suite=[canon._encode(list(t.args)) for t in suite],
        matrix=[[out.to_json() for out in row] for row in matrix.cells],
        verdict=verdict.to_json(),
        warnings=warnings,
    )
    return record


def _program_json(p: GeneratedProgram) -> dict:
    return {
        "origin": p.origin,
        "para_index": p.para_index,
        "prompt_digest": p.prompt_digest,
        "entry_point": p.entry_point,
        "source": p.source,
        "unrunnable_reason": p.unrunnable_reason,
    }


def run_validation(entries: list[dict], cfg: RunConfig, backend: Backend) -> dict:
    """Validate every corpus entry and assemble the run manifest."""
    cfg.check()
    started = time.time()
    tasks = []
    for entry in entries:
        try:
            tasks.append(validate_task(entry, cfg, backend))
        except Exception as exc:  # per-task failure: record and move on
            log.exception("task %s failed", entry.get("task_id"))
            tasks.append({"task_id": entry.get("task_id"),
                          "status": "failed", "reason": str(exc)})
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "config": _config_json(cfg),
        "tasks": tasks,
        "timing": {"started_at": started, "finished_at": time.time()},
    }
    return manifest


def _config_json(cfg: RunConfig) -> dict:
    return asdict(cfg)


def write_manifest(manifest: dict, output_dir: str) -> str:
    os.makedirs(output_dir, exist_ok=True)
    suites_dir = os.path.join(output_dir, "suites")
    os.makedirs(suites_dir, exist_ok=True)
    for task in manifest["tasks"]:
        if task.get("suite") is not None:
            path = os.path.join(suites_dir, task["task_id"].replace("/", "_") + ".jsonl")
            with open(path, "w", encoding="utf-8") as fh:
                for args in task["suite"]:
                    fh.write(json.dumps(args, sort_keys=True, separators=(",", ":")) + "\n")
    path = os.path.join(output_dir, "manifest.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return path


def strip_timing(manifest: dict) -> dict:
    """Copy of a manifest with volatile timestamp fields removed."""
    out = dict(manifest)
    out.pop("timing", None)
    return out


# ---------------------------------------------------------------------------
# evaluate / filter


def _target_program(task: dict) -> GeneratedProgram:
    rec = next(p for p in task["programs"] if p["origin"] == "target")
    return GeneratedProgram(
        source=rec["source"], origin="target", para_index=None,
        prompt_digest=rec["prompt_digest"], entry_point=rec["entry_point"],
        unrunnable_reason=rec["unrunnable_reason"],
    )


def _verdict_from_json(data: dict) -> Verdict:
    return Verdict(
        error_flag=data["error_flag"],
        diff_set=frozenset(data["diff_set"]),
        mode=data["mode"],
        per_cell_agreement=data.get("per_cell_agreement", []),
        indeterminate=data.get("indeterminate", False),
    )


def run_evaluation(entries: list[dict], manifest: dict, cfg: RunConfig) -> MetricsReport:
    """Label target programs against corpus ground truth and compute metrics."""
    validated = [t for t in manifest["tasks"] if t.get("status") == "validated"]
    if not validated:
        raise MissingGroundTruth("manifest contains no validated tasks to evaluate")
    by_id = {e["task_id"]: e for e in entries}

    labels: dict[str, GroundTruthLabel] = {}
    verdicts: dict[str, Verdict] = {}
    for task in validated:
        entry = by_id.get(task["task_id"])
        if entry is None:
            continue
        missing = [f for f in ("canonical_solution", "test") if f not in entry]
        if missing:
            raise MissingGroundTruth(
                "corpus entry %s lacks ground-truth fields: %s"
                % (task["task_id"], ", ".join(missing)))
        try:
            labels[task["task_id"]] = label_target(
                _target_program(task), entry, budget=cfg.budget,
                runner_cmd=cfg.runner_cmd)
        except GroundTruthBroken as exc:
            log.warning("excluding task: %s", exc)
            continue
        verdicts[task["task_id"]] = _verdict_from_json(task["verdict"])
    return compute_metrics(labels, verdicts)


def run_filter(manifest: dict) -> tuple[list[dict], dict]:
    """Keep only target programs the validator did not flag.

    Returns (accepted records, summary).
    """
    accepted = []
    flagged = 0
    for task in manifest["tasks"]:
        if task.get("status") != "validated":
            continue
        if task["verdict"]["error_flag"]:
            flagged += 1
            continue
        target = _target_program(task)
        accepted.append({"task_id": task["task_id"], "source": target.source,
                         "entry_point": target.entry_point})
    summary = {"accepted": len(accepted), "rejected": flagged}
    return accepted, summary
