"""Command-line entry points for the learning harness.

Every subcommand reads the battery dataset file format produced by the
simulator's sweep pipeline and writes JSON, table, image, or model-bundle
artifacts.  All randomness is controlled by --seed.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import joblib
import numpy as np

from .data import LOGIT_FEATURES, MAPPINGS, load_dataset
from .evaluation import evaluate
from .importance import permutation_importance
from .labeling import label_classes
from .logit import logistic_high_class
from .report import (
    plot_class_histogram,
    plot_cluster_curves,
    plot_confusion,
    plot_importance,
    plot_roc_pr,
    write_manifest,
    write_metrics_table,
)
from .training import DEFAULT_BUDGET, FAMILIES, OBJECTIVES, train_classifier


def _fail(message: str) -> None:
    click.echo(json.dumps({"error": message}), err=True)
    sys.exit(1)


def _labels_for(dataset, labeler_path):
    with open(labeler_path) as fh:
        payload = json.load(fh)
    from .labeling import Labeler

    labeler = Labeler(
        K=payload["K"],
        mean=payload["mean"],
        scale=payload["scale"],
        centers=np.asarray(payload["centers"], dtype=float),
        status=payload["status"],
    )
    return labeler.apply(dataset.ratio)


@click.group()
def main() -> None:
    """Clustering labels, classification, importance, and log-odds analysis."""


@main.command()
@click.option("--dataset", required=True, type=click.Path(exists=True))
@click.option("--out", required=True, type=click.Path(), help="labeler JSON output")
@click.option("--curves", type=click.Path(), help="silhouette/WCSS figure output")
@click.option("--histogram", type=click.Path(), help="class histogram figure output")
@click.option("--seed", default=0, show_default=True)
def label(dataset, out, curves, histogram, seed):
    """Fit the rule-plus-clustering labeler on a development dataset."""
    try:
        data = load_dataset(dataset)
        result = label_classes(data.ratio, seed=seed)
    except ValueError as exc:
        _fail(str(exc))
    payload = {
        "K": result.labeler.K,
        "mean": result.labeler.mean,
        "scale": result.labeler.scale,
        "centers": [float(c) for c in result.labeler.centers],
        "status": result.labeler.status,
        "k_values": list(result.k_values),
        "silhouettes": [float(s) for s in result.silhouettes],
        "wcss": [float(w) for w in result.wcss],
        "class_counts": {
            str(c): int(n) for c, n in zip(*np.unique(result.labels, return_counts=True))
        },
    }
    with open(out, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    if curves and result.labeler.status == "ok":
        plot_cluster_curves(curves, result.k_values, result.silhouettes, result.wcss)
    if histogram:
        plot_class_histogram(histogram, result.labels)
    click.echo(json.dumps({"K": result.labeler.K, "status": result.labeler.status}))


@main.command()
@click.option("--dataset", required=True, type=click.Path(exists=True))
@click.option("--labeler", required=True, type=click.Path(exists=True))
@click.option("--mapping", required=True, type=click.Choice(sorted(MAPPINGS)))
@click.option("--family", required=True, type=click.Choice(FAMILIES))
@click.option("--objective", default="f1", type=click.Choice(OBJECTIVES), show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.option("--out", required=True, type=click.Path(), help="model bundle output")
def train(dataset, labeler, mapping, family, objective, seed, budget, out):
    """Search hyperparameters and train one classifier on a labeled dataset."""
    try:
        data = load_dataset(dataset)
        y = _labels_for(data, labeler)
        model = train_classifier(
            data.features(mapping), y, data.groups, family,
            objective=objective, seed=seed, n_iter=budget,
        )
    except ValueError as exc:
        _fail(str(exc))
    joblib.dump(
        {
            "estimator": model.estimator,
            "mapping": mapping,
            "family": family,
            "objective": objective,
            "train_size": len(data),
            "train_groups": np.unique(data.groups),
            "best_params": model.best_params,
            "cv_score": model.cv_score,
        },
        out,
    )
    click.echo(json.dumps({"cv_score": model.cv_score, "best_params": {
        k: (v if not isinstance(v, tuple) else list(v)) for k, v in model.best_params.items()
    }}))


@main.command(name="evaluate")
@click.option("--dataset", required=True, type=click.Path(exists=True))
@click.option("--labeler", required=True, type=click.Path(exists=True))
@click.option("--model", "model_path", required=True, type=click.Path(exists=True))
@click.option("--metrics-out", type=click.Path(), help="append a metrics table row")
@click.option("--figures-dir", type=click.Path(), help="confusion/ROC/PR figure directory")
def evaluate_cmd(dataset, labeler, model_path, metrics_out, figures_dir):
    """Score a trained model on a held-out dataset."""
    bundle = joblib.load(model_path)
    try:
        data = load_dataset(dataset)
        y = _labels_for(data, labeler)
        X = data.features(bundle["mapping"])
        result = evaluate(
            bundle["estimator"], X, y,
            train_groups=bundle["train_groups"], test_groups=data.groups,
        )
    except ValueError as exc:
        _fail(str(exc))
    row = {
        "mapping": bundle["mapping"],
        "family": bundle["family"],
        "objective": bundle["objective"],
        "size": bundle["train_size"],
        "accuracy": result.accuracy,
        "f1": result.f1_macro,
        "mcc": result.mcc,
        "roc": result.roc_auc_macro,
        "pr": result.pr_auc_macro,
    }
    if metrics_out:
        path = Path(metrics_out)
        rows = []
        if path.exists():
            import csv as _csv

            with open(path, newline="") as fh:
                rows = list(_csv.DictReader(fh))
        rows.append(row)
        write_metrics_table(path, rows)
    if figures_dir:
        fig_dir = Path(figures_dir)
        fig_dir.mkdir(parents=True, exist_ok=True)
        stem = f"{bundle['mapping']}_{bundle['family']}_{bundle['objective']}"
        plot_confusion(fig_dir / f"{stem}_confusion.png", result.confusion, result.classes)
        proba = bundle["estimator"].predict_proba(X)
        plot_roc_pr(fig_dir / f"{stem}_roc_pr.png", y, proba, result.classes)
        write_manifest(fig_dir, [p.name for p in fig_dir.glob("*.png")])
    click.echo(json.dumps({k: row[k] for k in ("accuracy", "f1", "mcc", "roc", "pr")}))


@main.command()
@click.option("--dataset", required=True, type=click.Path(exists=True))
@click.option("--labeler", required=True, type=click.Path(exists=True))
@click.option("--mapping", default="f_all18", type=click.Choice(sorted(MAPPINGS)), show_default=True)
@click.option("--family", required=True, type=click.Choice(FAMILIES))
@click.option("--seed", default=0, show_default=True)
@click.option("--trials", default=5, show_default=True)
@click.option("--out", type=click.Path(), help="importance JSON output")
@click.option("--figure", type=click.Path(), help="importance bar chart output")
def importance(dataset, labeler, mapping, family, seed, trials, out, figure):
    """Permutation feature importance under a fixed reference model."""
    try:
        data = load_dataset(dataset)
        y = _labels_for(data, labeler)
        result = permutation_importance(
            data.features(mapping), y, data.groups, MAPPINGS[mapping],
            family, seed=seed, trials=trials,
        )
    except ValueError as exc:
        _fail(str(exc))
    payload = {
        "family": family,
        "mapping": mapping,
        "baseline_f1": result.baseline_f1,
        "importance": {
            n: {"mean": float(m), "std": float(s)}
            for n, m, s in zip(result.feature_names, result.mean, result.std)
        },
        "ranking": result.ranking(),
    }
    if out:
        with open(out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if figure:
        plot_importance(figure, result)
    click.echo(json.dumps({"ranking": payload["ranking"][:5]}))


@main.command()
@click.option("--dataset", required=True, type=click.Path(exists=True))
@click.option("--labeler", required=True, type=click.Path(exists=True))
@click.option("--seed", default=0, show_default=True)
@click.option("--out", type=click.Path(), help="coefficients JSON output")
def logit(dataset, labeler, seed, out):
    """Log-odds analysis of the high-ergotropy class."""
    try:
        data = load_dataset(dataset)
        y = _labels_for(data, labeler)
        names = LOGIT_FEATURES
        X = np.column_stack([data.column(n) for n in names])
        result = logistic_high_class(X, y, names, seed=seed)
    except ValueError as exc:
        _fail(str(exc))
    payload = {
        "intercept": result.intercept,
        "coefficients": result.coefficients,
        "train_accuracy": result.train_accuracy,
    }
    if out:
        with open(out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    click.echo(json.dumps(payload["coefficients"]))


@main.command()
@click.option("--metrics", required=True, type=click.Path(exists=True))
@click.option("--out-dir", required=True, type=click.Path())
def report(metrics, out_dir):
    """Collect metric rows into a report directory with a manifest."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    import csv as _csv

    with open(metrics, newline="") as fh:
        rows = list(_csv.DictReader(fh))
    write_metrics_table(out / "metrics.csv", rows)
    manifest = write_manifest(out, ["metrics.csv"])
    click.echo(json.dumps({"rows": len(rows), "manifest": str(manifest)}))


if __name__ == "__main__":
    main()
