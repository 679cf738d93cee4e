"""Command-line entry points."""

from __future__ import annotations

import dataclasses
import json
import logging
import sys

import click

from .llm import Backend, CachingBackend, LiveBackend, ReplayBackend
from .pipeline import (MissingGroundTruth, RunConfig, run_evaluation,
                       run_filter, run_validation, write_manifest)
from .fuzz import FuzzConfig, UnsupportedType, generate_inputs
from .paraphrase import make_paraphrases
from .prompts import MalformedPrompt, iter_corpus, lint_prompt, parse_prompt

log = logging.getLogger(__name__)


def _load_config(config_path: str | None, overrides: dict) -> RunConfig:
    """Precedence: explicit flags > config file > defaults."""
    data: dict = {}
    if config_path:
        with open(config_path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    data.update({k: v for k, v in overrides.items() if v is not None})
    known = {f.name for f in dataclasses.fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise click.UsageError("unknown config keys: %s" % ", ".join(sorted(unknown)))
    return RunConfig(**data)


def _make_backend(cfg: RunConfig) -> Backend:
    if cfg.backend == "replay":
        if not cfg.fixtures:
            raise click.UsageError("replay backend needs --fixtures")
        backend: Backend = ReplayBackend(cfg.fixtures)
    elif cfg.backend == "live":
        backend = LiveBackend(cfg.base_url)
    else:
        raise click.UsageError("unknown backend %r" % cfg.backend)
    if cfg.cache_dir:
        backend = CachingBackend(backend, cfg.cache_dir)
    return backend


_shared = [
    click.option("--config", "config_path", type=click.Path(exists=True), default=None,
                 help="JSON config file; flags override it."),
    click.option("--corpus", type=click.Path(exists=True), default=None),
    click.option("--backend", type=click.Choice(["live", "replay"]), default=None),
    click.option("--fixtures", type=click.Path(exists=True), default=None),
    click.option("--cache-dir", "cache_dir", default=None),
    click.option("--base-url", "base_url", default=None),
    click.option("--model-name", "model_name", default=None),
    click.option("-k", "--paraphrases", "k", type=int, default=None),
    click.option("--mode", type=click.Choice(["majority", "conservative"]), default=None),
    click.option("--ablation", type=click.Choice(["none", "repeat-prompt"]), default=None),
    click.option("--seed", type=int, default=None),
    click.option("--max-inputs", "max_inputs", type=int, default=None),
    click.option("--budget", type=float, default=None),
    click.option("--workers", type=int, default=None),
    click.option("--output-dir", "output_dir", default=None),
    click.option("--runner-cmd", "runner_cmd_str", default=None,
                 help="Alternative runner command (whitespace-separated)."),
    click.option("--allow-even-k", "allow_even_k", is_flag=True, default=None),
]


def shared_options(fn):
    for opt in reversed(_shared):
        fn = opt(fn)
    return fn


def _config_from_params(config_path, runner_cmd_str, **overrides) -> RunConfig:
    if runner_cmd_str is not None:
        overrides["runner_cmd"] = runner_cmd_str.split()
    return _load_config(config_path, overrides)


@click.group()
@click.option("-v", "--verbose", is_flag=True)
def main(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command()
@shared_options
def validate(config_path, runner_cmd_str, **overrides) -> None:
    """Validate every corpus task and write the run manifest."""
    cfg = _config_from_params(config_path, runner_cmd_str, **overrides)
    if not cfg.corpus:
        raise click.UsageError("--corpus is required")
    entries = list(iter_corpus(cfg.corpus))
    backend = _make_backend(cfg)
    manifest = run_validation(entries, cfg, backend)
    path = write_manifest(manifest, cfg.output_dir)
    flagged = sum(
        1 for t in manifest["tasks"]
        if t.get("status") == "validated" and t["verdict"]["error_flag"])
    click.echo("manifest: %s" % path)
    click.echo("tasks: %d validated, %d flagged erroneous"
               % (sum(1 for t in manifest["tasks"] if t.get("status") == "validated"),
                  flagged))


@main.command()
@shared_options
@click.option("--manifest", "manifest_path", type=click.Path(exists=True), required=True)
@click.option("--json-out", "json_out", type=click.Path(), default=None)
def evaluate(config_path, runner_cmd_str, manifest_path, json_out, **overrides) -> None:
    """Score a manifest against corpus ground truth."""
    cfg = _config_from_params(config_path, runner_cmd_str, **overrides)
    if not cfg.corpus:
        raise click.UsageError("--corpus is required")
    with open(manifest_path, "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    entries = list(iter_corpus(cfg.corpus))
    try:
        report = run_evaluation(entries, manifest, cfg)
    except MissingGroundTruth as exc:
        raise click.ClickException(str(exc))
    click.echo(report.render())
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")


@main.command("filter")
@click.option("--manifest", "manifest_path", type=click.Path(exists=True), required=True)
@click.option("-o", "--output", "output_path", type=click.Path(), required=True)
def filter_cmd(manifest_path, output_path) -> None:
    """Emit only the target programs that were not flagged erroneous."""
    with open(manifest_path, "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    accepted, summary = run_filter(manifest)
    with open(output_path, "w", encoding="utf-8") as fh:
        for rec in accepted:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    click.echo("accepted %d program(s), rejected %d"
               % (summary["accepted"], summary["rejected"]))


@main.command()
@shared_options
@click.option("--task-id", "task_id", required=True)
def paraphrase(config_path, runner_cmd_str, task_id, **overrides) -> None:
    """Debug helper: print the paraphrase prompts for one task."""
    cfg = _config_from_params(config_path, runner_cmd_str, **overrides)
    entry = _find_task(cfg, task_id)
    spec = parse_prompt(entry["prompt"], task_id)
    for warning in lint_prompt(spec):
        click.echo("lint: %s" % warning, err=True)
    pset = make_paraphrases(spec, cfg.k, _make_backend(cfg), cfg.model_name)
    for i, variant in enumerate(pset.variants):
        click.echo("--- paraphrase %d ---" % i)
        click.echo(variant)


@main.command()
@shared_options
@click.option("--task-id", "task_id", required=True)
def fuzz(config_path, runner_cmd_str, task_id, **overrides) -> None:
    """Debug helper: print the generated input suite for one task."""
    cfg = _config_from_params(config_path, runner_cmd_str, **overrides)
    entry = _find_task(cfg, task_id)
    spec = parse_prompt(entry["prompt"], task_id)
    try:
        suite = generate_inputs(spec.signature,
                                FuzzConfig(seed=cfg.seed, max_inputs=cfg.max_inputs))
    except UnsupportedType as exc:
        raise click.ClickException("not validatable: unsupported type %s" % exc)
    for t in suite:
        click.echo(json.dumps(list(t.args)))


def _find_task(cfg: RunConfig, task_id: str) -> dict:
    if not cfg.corpus:
        raise click.UsageError("--corpus is required")
    for entry in iter_corpus(cfg.corpus):
        if entry["task_id"] == task_id:
            return entry
    raise click.ClickException("task %r not found in corpus" % task_id)


if __name__ == "__main__":
    main()
