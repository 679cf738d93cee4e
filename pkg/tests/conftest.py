import json
import os
import time

import pytest

from promptdiff.llm import ReplayBackend
from promptdiff.pipeline import RunConfig, run_validation
from promptdiff.prompts import iter_corpus

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")

CORPUS = os.path.join(DATA, "corpus.jsonl")
CORPUS8 = os.path.join(DATA, "corpus8.jsonl")
CORPUS10 = os.path.join(DATA, "corpus10.jsonl")
FIXTURES = os.path.join(DATA, "fixtures.jsonl")

# Engineered verdicts for the 8-task replay scenario (see scripts/make_fixtures.py):
# fp_cluster -> flagged though the target is correct; fn_shared -> unflagged
# though the target is wrong; agree -> unflagged and correct.
EXPECTED_VERDICTS = {
    "Fixture/0": True,
    "Fixture/1": False,
    "Fixture/2": False,
    "Fixture/3": False,
    "Fixture/4": False,
    "Fixture/5": False,
    "Fixture/6": False,
    "Fixture/7": True,
}
TRULY_ERRONEOUS = {"Fixture/3", "Fixture/6"}


def load_corpus(path):
    return list(iter_corpus(path))


def replay_config(corpus, **kw):
    defaults = dict(corpus=corpus, backend="replay", fixtures=FIXTURES,
                    budget=5.0, workers=8)
    defaults.update(kw)
    return RunConfig(**defaults)


@pytest.fixture(scope="session")
def e2e_run():
    """One full replay run over the 8-task corpus, with its wall time."""
    cfg = replay_config(CORPUS8)
    entries = load_corpus(CORPUS8)
    t0 = time.monotonic()
    manifest = run_validation(entries, cfg, ReplayBackend(FIXTURES))
    elapsed = time.monotonic() - t0
    return {"manifest": manifest, "elapsed": elapsed, "config": cfg,
            "entries": entries}


@pytest.fixture(scope="session")
def determinism_runs():
    """Two independent replay runs over the 10-task corpus."""
    entries = load_corpus(CORPUS10)
    t0 = time.monotonic()
    manifests = []
    for _ in range(2):
        cfg = replay_config(CORPUS10, max_inputs=8)
        manifests.append(run_validation(entries, cfg, ReplayBackend(FIXTURES)))
    elapsed = time.monotonic() - t0
    return {"manifests": manifests, "elapsed": elapsed}
