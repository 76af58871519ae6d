"""Permutation feature importance under fixed reference models.

Importance of a feature is the drop in macro F1 on a held-out validation
split when that feature's column is shuffled, averaged over a fixed number
of shuffle trials.  Models use fixed hyperparameters (no search) so that
importances are comparable across runs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.ensemble import HistGradientBoostingClassifier, RandomForestClassifier
from sklearn.impute import SimpleImputer
from sklearn.metrics import f1_score
from sklearn.model_selection import GroupShuffleSplit
from sklearn.neural_network import MLPClassifier
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import StandardScaler

DEFAULT_TRIALS = 5
VALIDATION_FRACTION = 0.30


@dataclass(frozen=True)
class ImportanceResult:
    family: str
    feature_names: tuple[str, ...]
    baseline_f1: float
    mean: np.ndarray
    std: np.ndarray

    def ranking(self) -> list[str]:
        order = np.argsort(self.mean)[::-1]
        return [self.feature_names[i] for i in order]


def fixed_model(family: str, seed: int) -> Pipeline:
    """Reference pipelines with fixed hyperparameters for importance runs."""
    steps = [("impute", SimpleImputer(strategy="median"))]
    if family == "rf":
        model = RandomForestClassifier(
            n_estimators=100, max_depth=10, random_state=seed, n_jobs=-1
        )
    elif family == "hgb":
        model = HistGradientBoostingClassifier(
            max_iter=100, learning_rate=0.1, max_depth=5, random_state=seed
        )
    elif family == "mlp":
        steps.append(("scale", StandardScaler()))
        model = MLPClassifier(
            hidden_layer_sizes=(100, 50),
            activation="relu",
            solver="adam",
            max_iter=500,
            random_state=seed,
        )
    else:
        raise ValueError(f"unknown family: {family}")
    steps.append(("model", model))
    return Pipeline(steps)


def permutation_importance(
    X: np.ndarray,
    y: np.ndarray,
    groups: np.ndarray,
    feature_names: tuple[str, ...],
    family: str,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> ImportanceResult:
    """Fit a fixed model on a 70:30 group split and shuffle features on the 30%."""
    splitter = GroupShuffleSplit(
        n_splits=1, test_size=VALIDATION_FRACTION, random_state=seed
    )
    (train_idx, valid_idx), = splitter.split(X, y, groups=groups)
    model = fixed_model(family, seed)
    model.fit(X[train_idx], y[train_idx])
    X_valid, y_valid = X[valid_idx], y[valid_idx]
    baseline = f1_score(y_valid, model.predict(X_valid), average="macro")
    rng = np.random.default_rng(seed)
    mean = np.empty(X.shape[1])
    std = np.empty(X.shape[1])
    for j in range(X.shape[1]):
        drops = np.empty(trials)
        for t in range(trials):
            shuffled = X_valid.copy()
            col = shuffled[:, j]
            # shuffling a constant column is the identity, importance 0 exactly
            if np.all(col == col[0]):
                drops[t] = 0.0
                continue
            rng.shuffle(col)
            score = f1_score(y_valid, model.predict(shuffled), average="macro")
            drops[t] = baseline - score
        mean[j] = drops.mean()
        std[j] = drops.std()
    return ImportanceResult(
        family=family,
        feature_names=tuple(feature_names),
        baseline_f1=float(baseline),
        mean=mean,
        std=std,
    )
