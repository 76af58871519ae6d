from __future__ import annotations

import numpy as np
import pytest

from mlharness import permutation_importance
from mlharness.importance import fixed_model


def _labeled(n=2000, seed=0):
    rng = np.random.default_rng(seed)
    y = rng.integers(0, 4, n)
    groups = np.arange(n) // 2
    return y, groups, rng


def test_constant_feature_has_exactly_zero_importance():
    y, groups, rng = _labeled()
    X = np.column_stack([y + 0.01 * rng.normal(size=len(y)), np.full(len(y), 3.7)])
    result = permutation_importance(X, y, groups, ("signal", "constant"), "rf", seed=0)
    assert result.mean[1] == 0.0
    assert result.std[1] == 0.0
    assert result.mean[0] > 0.1


def test_leak_feature_importance_near_baseline():
    y, groups, rng = _labeled()
    X = np.column_stack([y.astype(float), rng.normal(size=len(y)), rng.normal(size=len(y))])
    result = permutation_importance(X, y, groups, ("leak", "noise1", "noise2"), "rf", seed=0)
    leak = result.mean[0]
    # shuffling the leak collapses macro F1 to chance level (~0.25 for 4 classes)
    assert result.baseline_f1 > 0.99
    assert leak > result.baseline_f1 - 0.35
    assert result.ranking()[0] == "leak"


def test_unknown_family_rejected():
    with pytest.raises(ValueError, match="unknown family"):
        fixed_model("svm", 0)


@pytest.mark.parametrize("family", ["rf", "hgb", "mlp"])
def test_fixed_models_fit_and_rank(family):
    y, groups, rng = _labeled(n=600)
    X = np.column_stack([y + 0.05 * rng.normal(size=len(y)), rng.normal(size=len(y))])
    result = permutation_importance(
        X, y, groups, ("signal", "noise"), family, seed=0, trials=3
    )
    assert result.ranking()[0] == "signal"
