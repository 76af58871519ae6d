"""Rendering of metrics tables and diagnostic figures.

Outputs a machine-readable metrics table (one row per mapping, family, and
objective) plus image files: class histograms, cluster-selection curves,
confusion matrices, ROC and precision-recall panels, and importance bars.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from sklearn.metrics import precision_recall_curve, roc_curve

METRICS_COLUMNS = (
    "mapping", "family", "objective", "size", "accuracy", "f1", "mcc", "roc", "pr",
)


def write_metrics_table(path, rows: list[dict]) -> None:
    """Write evaluation rows to a comma-separated table with a fixed header."""
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=METRICS_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in METRICS_COLUMNS})


def plot_class_histogram(path, labels: np.ndarray) -> None:
    classes, counts = np.unique(labels, return_counts=True)
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar([str(c) for c in classes], counts, color="tab:blue")
    ax.set_xlabel("class")
    ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_cluster_curves(path, k_values, silhouettes, wcss) -> None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3))
    ax1.plot(k_values, silhouettes, "o-")
    ax1.set_xlabel("K")
    ax1.set_ylabel("silhouette score")
    ax2.plot(k_values, wcss, "o-")
    ax2.set_xlabel("K")
    ax2.set_ylabel("within-cluster sum of squares")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_confusion(path, confusion: np.ndarray, classes) -> None:
    fig, ax = plt.subplots(figsize=(4, 3.5))
    im = ax.imshow(confusion, cmap="Blues")
    ax.set_xticks(range(len(classes)), [str(c) for c in classes])
    ax.set_yticks(range(len(classes)), [str(c) for c in classes])
    ax.set_xlabel("predicted")
    ax.set_ylabel("true")
    for i in range(confusion.shape[0]):
        for j in range(confusion.shape[1]):
            ax.text(j, i, str(confusion[i, j]), ha="center", va="center")
    fig.colorbar(im, ax=ax)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_roc_pr(path, y_true: np.ndarray, proba: np.ndarray, classes) -> None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.5))
    for i, c in enumerate(classes):
        mask = (y_true == c).astype(int)
        if mask.min() == mask.max():
            continue
        fpr, tpr, _ = roc_curve(mask, proba[:, i])
        prec, rec, _ = precision_recall_curve(mask, proba[:, i])
        ax1.plot(fpr, tpr, label=f"class {c}")
        ax2.plot(rec, prec, label=f"class {c}")
    ax1.plot([0, 1], [0, 1], "k--", lw=0.8)
    ax1.set_xlabel("false positive rate")
    ax1.set_ylabel("true positive rate")
    ax1.legend()
    ax2.set_xlabel("recall")
    ax2.set_ylabel("precision")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_importance(path, result) -> None:
    order = np.argsort(result.mean)[::-1]
    names = [result.feature_names[i] for i in order]
    fig, ax = plt.subplots(figsize=(max(4, 0.45 * len(names)), 3.5))
    ax.bar(names, result.mean[order], yerr=result.std[order], color="tab:green")
    ax.set_ylabel("macro-F1 drop when shuffled")
    ax.tick_params(axis="x", rotation=60)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_manifest(directory, entries: list[str]) -> Path:
    """Record which artifacts a report run produced."""
    path = Path(directory) / "manifest.json"
    with open(path, "w") as fh:
        json.dump({"artifacts": sorted(entries)}, fh, indent=2)
        fh.write("\n")
    return path
