"""Shared fixtures: a desk-scale dataset produced through the simulator CLI.

The harness is exercised against real sweep output, obtained exclusively via
the `qbat` command-line interface (the dataset-file contract), never by
importing the simulator package.
"""
from __future__ import annotations

import subprocess

import pytest

SWEEP_SEED = 2024
VALUES_PER_PARAM = 4
LABEL_SEED = 0


def _run(args):
    proc = subprocess.run(args, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"{' '.join(args)} failed:\n{proc.stderr}")
    return proc.stdout


@pytest.fixture(scope="session")
def desk_paths(tmp_path_factory):
    root = tmp_path_factory.mktemp("desk")
    raw = root / "raw.csv"
    filtered = root / "filtered.csv"
    dev = root / "dev.csv"
    test = root / "test.csv"
    _run([
        "qbat", "sweep", "--seed", str(SWEEP_SEED),
        "--values-per-param", str(VALUES_PER_PARAM),
        "--workers", "2", "--out", str(raw),
    ])
    _run(["qbat", "filter", "--dataset", str(raw), "--out", str(filtered)])
    _run([
        "qbat", "split", "--dataset", str(filtered),
        "--dev-out", str(dev), "--test-out", str(test),
    ])
    return {"raw": raw, "filtered": filtered, "dev": dev, "test": test}


@pytest.fixture(scope="session")
def desk_data(desk_paths):
    from mlharness import label_classes, load_dataset

    dev = load_dataset(desk_paths["dev"])
    test = load_dataset(desk_paths["test"])
    label_result = label_classes(dev.ratio, seed=LABEL_SEED)
    return {
        "dev": dev,
        "test": test,
        "labels_dev": label_result.labels,
        "labels_test": label_result.labeler.apply(test.ratio),
        "label_result": label_result,
    }
