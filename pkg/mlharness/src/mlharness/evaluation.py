"""Held-out evaluation metrics for a trained classifier."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.metrics import (
    accuracy_score,
    average_precision_score,
    confusion_matrix,
    f1_score,
    matthews_corrcoef,
    roc_auc_score,
)


@dataclass(frozen=True)
class EvaluationResult:
    accuracy: float
    f1_macro: float
    mcc: float
    roc_auc_macro: float
    pr_auc_macro: float
    confusion: np.ndarray
    classes: np.ndarray


def _macro_curve_scores(y_true, proba, classes):
    """One-vs-rest macro ROC and PR areas; NaN when a class is absent."""
    roc, pr = [], []
    for i, c in enumerate(classes):
        mask = (y_true == c).astype(int)
        if mask.min() == mask.max():
            continue
        roc.append(roc_auc_score(mask, proba[:, i]))
        pr.append(average_precision_score(mask, proba[:, i]))
    if not roc:
        return float("nan"), float("nan")
    return float(np.mean(roc)), float(np.mean(pr))


def evaluate(
    estimator,
    X_test: np.ndarray,
    y_test: np.ndarray,
    train_groups: np.ndarray | None = None,
    test_groups: np.ndarray | None = None,
) -> EvaluationResult:
    """Score on held-out data, refusing evaluation if groups leak across splits."""
    if train_groups is not None and test_groups is not None:
        overlap = set(np.unique(train_groups)) & set(np.unique(test_groups))
        if overlap:
            raise ValueError(f"{len(overlap)} group(s) appear in both train and test")
    y_pred = estimator.predict(X_test)
    classes = estimator.classes_
    proba = estimator.predict_proba(X_test)
    roc, pr = _macro_curve_scores(np.asarray(y_test), proba, classes)
    return EvaluationResult(
        accuracy=float(accuracy_score(y_test, y_pred)),
        f1_macro=float(f1_score(y_test, y_pred, average="macro")),
        mcc=float(matthews_corrcoef(y_test, y_pred)),
        roc_auc_macro=roc,
        pr_auc_macro=pr,
        confusion=confusion_matrix(y_test, y_pred, labels=classes),
        classes=np.asarray(classes),
    )
