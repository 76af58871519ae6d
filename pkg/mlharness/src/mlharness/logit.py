"""Binary log-odds analysis of the high-ergotropy class.

Fits a logistic regression for the event "label == 2" on a small z-scored
feature set and reports the coefficients, whose signs indicate how each
feature pushes a record toward or away from the high regime.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from sklearn.linear_model import LogisticRegression
from sklearn.metrics import accuracy_score
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import StandardScaler

HIGH_CLASS = 2


class SeparableWarning(UserWarning):
    """The two outcomes are linearly separable; coefficients are unbounded."""


@dataclass(frozen=True)
class LogitResult:
    feature_names: tuple[str, ...]
    intercept: float
    coefficients: dict[str, float]
    train_accuracy: float


def logistic_high_class(
    X: np.ndarray,
    labels: np.ndarray,
    feature_names: tuple[str, ...],
    seed: int = 0,
) -> LogitResult:
    """Fit P(label == 2) on z-scored features; raises on single-outcome input."""
    y = (np.asarray(labels) == HIGH_CLASS).astype(int)
    if y.min() == y.max():
        raise ValueError("both binary outcomes must be present to fit the log-odds model")
    pipe = Pipeline(
        [
            ("scale", StandardScaler()),
            ("model", LogisticRegression(max_iter=1000, random_state=seed)),
        ]
    )
    pipe.fit(X, y)
    acc = accuracy_score(y, pipe.predict(X))
    if acc == 1.0:
        warnings.warn(
            "training outcomes are perfectly separated; coefficient magnitudes "
            "are not identified",
            SeparableWarning,
            stacklevel=2,
        )
    model = pipe.named_steps["model"]
    coefs = model.coef_.ravel()
    return LogitResult(
        feature_names=tuple(feature_names),
        intercept=float(model.intercept_[0]),
        coefficients={n: float(c) for n, c in zip(feature_names, coefs)},
        train_accuracy=float(acc),
    )
