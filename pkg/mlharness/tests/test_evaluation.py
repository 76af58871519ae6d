from __future__ import annotations

import numpy as np
import pytest

from mlharness import evaluate


class FixedPredictor:
    """Stub estimator returning preset predictions."""

    def __init__(self, predictions, classes=(0, 1, 2)):
        self.predictions = np.asarray(predictions)
        self.classes_ = np.asarray(classes)

    def predict(self, X):
        return self.predictions

    def predict_proba(self, X):
        proba = np.zeros((len(self.predictions), len(self.classes_)))
        for i, p in enumerate(self.predictions):
            proba[i, list(self.classes_).index(p)] = 1.0
        return proba


def test_perfect_predictions_score_one():
    y = np.array([0, 1, 2, 0, 1, 2, 1, 1])
    result = evaluate(FixedPredictor(y), np.zeros((len(y), 2)), y)
    assert result.accuracy == 1.0
    assert result.f1_macro == 1.0
    assert result.mcc == 1.0
    off_diagonal = result.confusion - np.diag(np.diag(result.confusion))
    assert off_diagonal.sum() == 0
    assert result.confusion.sum(axis=1).tolist() == [2, 4, 2]


def test_random_predictions_have_near_zero_mcc():
    rng = np.random.default_rng(5)
    n = 10_000
    y = rng.integers(0, 3, n)
    preds = rng.integers(0, 3, n)
    result = evaluate(FixedPredictor(preds), np.zeros((n, 2)), y)
    assert abs(result.mcc) < 0.05


def test_group_leakage_is_rejected():
    y = np.array([0, 1])
    with pytest.raises(ValueError, match="train and test"):
        evaluate(
            FixedPredictor(y), np.zeros((2, 2)), y,
            train_groups=np.array(["a", "b"]),
            test_groups=np.array(["b", "c"]),
        )


def test_metric_ranges_on_noisy_predictions():
    rng = np.random.default_rng(6)
    y = rng.integers(0, 3, 300)
    preds = np.where(rng.random(300) < 0.7, y, rng.integers(0, 3, 300))
    result = evaluate(FixedPredictor(preds), np.zeros((300, 2)), y)
    assert 0.0 <= result.accuracy <= 1.0
    assert 0.0 <= result.f1_macro <= 1.0
    assert -1.0 <= result.mcc <= 1.0
    assert 0.0 <= result.roc_auc_macro <= 1.0
    assert 0.0 <= result.pr_auc_macro <= 1.0
