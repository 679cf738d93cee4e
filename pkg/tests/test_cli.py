import json

from click.testing import CliRunner

from promptdiff.cli import main

from conftest import CORPUS8, FIXTURES


def run_validate(tmp_path, *extra):
    runner = CliRunner()
    out_dir = str(tmp_path / "out")
    result = runner.invoke(main, [
        "validate", "--corpus", CORPUS8, "--backend", "replay",
        "--fixtures", FIXTURES, "--max-inputs", "3",
        "--output-dir", out_dir, *extra,
    ])
    return result, out_dir + "/manifest.json"


def test_validate_writes_manifest(tmp_path):
    result, manifest_path = run_validate(tmp_path)
    assert result.exit_code == 0, result.output
    with open(manifest_path) as fh:
        manifest = json.load(fh)
    assert len(manifest["tasks"]) == 8
    assert "flagged erroneous" in result.output


def test_exit_status_reflects_harness_health_not_verdicts(tmp_path):
    # flagged tasks exist, exit code must still be 0
    result, _ = run_validate(tmp_path)
    assert result.exit_code == 0


def test_even_k_rejected_without_override(tmp_path):
    runner = CliRunner()
    result = runner.invoke(main, [
        "validate", "--corpus", CORPUS8, "--backend", "replay",
        "--fixtures", FIXTURES, "-k", "4",
        "--output-dir", str(tmp_path / "o"),
    ])
    assert result.exit_code != 0


def test_evaluate_and_filter(tmp_path):
    _, manifest_path = run_validate(tmp_path)
    runner = CliRunner()

    result = runner.invoke(main, [
        "evaluate", "--corpus", CORPUS8, "--manifest", manifest_path,
        "--json-out", str(tmp_path / "metrics.json"),
    ])
    assert result.exit_code == 0, result.output
    with open(tmp_path / "metrics.json") as fh:
        metrics = json.load(fh)
    assert metrics["counts"]["fp"] == 2
    assert metrics["counts"]["fn"] == 2

    out = str(tmp_path / "accepted.jsonl")
    result = runner.invoke(main, ["filter", "--manifest", manifest_path,
                                  "-o", out])
    assert result.exit_code == 0
    assert "accepted 6" in result.output
    with open(out) as fh:
        assert len(fh.readlines()) == 6


def test_config_file_with_flag_override(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({
        "corpus": CORPUS8, "backend": "replay", "fixtures": FIXTURES,
        "max_inputs": 3, "k": 3,
    }))
    runner = CliRunner()
    result = runner.invoke(main, [
        "validate", "--config", str(cfg_path), "-k", "5",
        "--output-dir", str(tmp_path / "out"),
    ])
    assert result.exit_code == 0, result.output
    with open(tmp_path / "out" / "manifest.json") as fh:
        manifest = json.load(fh)
    assert manifest["config"]["k"] == 5  # flag beats file
    assert manifest["config"]["max_inputs"] == 3  # file beats default


def test_paraphrase_debug_command():
    runner = CliRunner()
    result = runner.invoke(main, [
        "paraphrase", "--corpus", CORPUS8, "--backend", "replay",
        "--fixtures", FIXTURES, "--task-id", "Fixture/1",
    ])
    assert result.exit_code == 0, result.output
    assert result.output.count("--- paraphrase") == 5


def test_fuzz_debug_command():
    runner = CliRunner()
    result = runner.invoke(main, [
        "fuzz", "--corpus", CORPUS8, "--task-id", "Fixture/0",
        "--max-inputs", "5",
    ])
    assert result.exit_code == 0, result.output
    lines = [l for l in result.output.splitlines() if l.strip()]
    assert len(lines) == 5
    assert json.loads(lines[0]) == [[]]
