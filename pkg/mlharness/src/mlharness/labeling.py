"""Rule-plus-clustering class labels for the ergotropy ratio.

Records with ratio < 1 form class 0 by rule.  The remaining ratios are
standardized and clustered with KMeans; the cluster count is chosen by the
silhouette maximum over K = 2..10, falling back to the elbow of the
within-cluster sum of squares when the silhouette curve has no clear
maximum.  Clusters become classes 1, 2, ... by ascending center so that
higher class index always means higher ratio.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.cluster import KMeans
from sklearn.metrics import silhouette_score

K_RANGE = tuple(range(2, 11))
SILHOUETTE_MARGIN = 1e-3
SILHOUETTE_SAMPLE = 5000

STATUS_OK = "ok"
STATUS_NO_HIGH_REGIME = "no_high_regime"


@dataclass(frozen=True)
class Labeler:
    """Everything needed to label new records consistently with the DEV fit."""

    K: int
    mean: float
    scale: float
    centers: np.ndarray  # cluster centers in standardized space, ascending
    status: str

    def apply(self, ratios: np.ndarray) -> np.ndarray:
        labels = np.zeros(len(ratios), dtype=int)
        high = ratios >= 1.0
        if self.status == STATUS_NO_HIGH_REGIME or not np.any(high):
            return labels
        z = (ratios[high] - self.mean) / self.scale
        # centers are sorted ascending, so the argmin index is the class - 1
        assignment = np.abs(z[:, None] - self.centers[None, :]).argmin(axis=1)
        labels[high] = assignment + 1
        return labels


@dataclass(frozen=True)
class LabelResult:
    labels: np.ndarray
    labeler: Labeler
    k_values: tuple[int, ...]
    silhouettes: np.ndarray
    wcss: np.ndarray


def _choose_k(silhouettes: np.ndarray, wcss: np.ndarray) -> int:
    order = np.argsort(silhouettes)
    if silhouettes[order[-1]] - silhouettes[order[-2]] > SILHOUETTE_MARGIN:
        return K_RANGE[int(order[-1])]
    # elbow: largest second difference of the WCSS curve
    second = wcss[:-2] - 2.0 * wcss[1:-1] + wcss[2:]
    return K_RANGE[int(np.argmax(second)) + 1]


def label_classes(ratios: np.ndarray, seed: int = 0) -> LabelResult:
    """Fit the labeling scheme on development-set ratios."""
    ratios = np.asarray(ratios, dtype=float)
    if ratios.size == 0:
        raise ValueError("cannot label an empty ratio array")
    high = ratios[ratios >= 1.0]
    if high.size < max(K_RANGE) + 1:
        labeler = Labeler(
            K=0, mean=0.0, scale=1.0, centers=np.array([]), status=STATUS_NO_HIGH_REGIME
        )
        return LabelResult(
            labels=np.zeros(len(ratios), dtype=int),
            labeler=labeler,
            k_values=K_RANGE,
            silhouettes=np.full(len(K_RANGE), np.nan),
            wcss=np.full(len(K_RANGE), np.nan),
        )
    mean = float(high.mean())
    scale = float(high.std())
    if scale == 0.0:
        scale = 1.0
    z = ((high - mean) / scale).reshape(-1, 1)
    silhouettes = np.empty(len(K_RANGE))
    wcss = np.empty(len(K_RANGE))
    fits = {}
    rng_sample = min(SILHOUETTE_SAMPLE, len(z))
    for i, k in enumerate(K_RANGE):
        km = KMeans(n_clusters=k, n_init=10, random_state=seed).fit(z)
        fits[k] = km
        wcss[i] = km.inertia_
        silhouettes[i] = silhouette_score(
            z, km.labels_, sample_size=rng_sample, random_state=seed
        )
    K = _choose_k(silhouettes, wcss)
    centers = np.sort(fits[K].cluster_centers_.ravel())
    labeler = Labeler(K=K, mean=mean, scale=scale, centers=centers, status=STATUS_OK)
    return LabelResult(
        labels=labeler.apply(ratios),
        labeler=labeler,
        k_values=K_RANGE,
        silhouettes=silhouettes,
        wcss=wcss,
    )
