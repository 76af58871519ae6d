"""Dataset file loading and the feature-subspace mappings.

The harness consumes the battery dataset file format directly (header-bearing
comma-separated text with a fixed column order) and never imports the
simulator package.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

COLUMNS = (
    "T_c", "T_h", "T_l", "tau", "p_c", "p_h", "eps", "eps_b", "eps_a",
    "F", "Q_c", "eta", "C1", "C2", "C3", "C4", "Q_h", "W",
    "ratio", "group_id", "flags",
)

NUMERIC_COLUMNS = COLUMNS[:19]

# the 16 primary features plus the two auxiliary energy columns
FEATURE_COLUMNS = COLUMNS[:16]
AUX_COLUMNS = ("Q_h", "W")
IMPORTANCE_COLUMNS = FEATURE_COLUMNS + AUX_COLUMNS

# feature subspaces, ordered by how they were identified: the five manual
# parameter-type groups, the full space, and the importance-driven subsets
MAPPINGS: dict[str, tuple[str, ...]] = {
    "f_T": ("T_h", "T_c", "T_l"),
    "f_E": ("eps", "eps_b", "eps_a"),
    "f_Q": ("p_c", "p_h", "tau"),
    "f_Th": ("eta", "Q_c", "F"),
    "f_C": ("C1", "C2", "C3", "C4"),
    "f_Full": FEATURE_COLUMNS,
    "f_all18": IMPORTANCE_COLUMNS,
    "f_1": ("C4", "p_c"),
    "f_2": ("C4", "p_c", "T_h"),
    "f_3": ("C4", "p_c", "Q_h"),
    "f_4": ("C4", "p_c", "Q_h", "eps_a"),
    "f_5": ("C4", "p_c", "Q_h", "T_h"),
    "f_6": ("C4", "p_c", "Q_h", "T_h", "T_l"),
    "f_7": ("C4", "p_c", "T_h", "T_l", "Q_h", "Q_c", "eps_a", "eps_b"),
    "f_8": ("C4", "T_l", "T_h", "Q_h"),
}

# features entering the binary log-odds analysis of the high regime
LOGIT_FEATURES = ("C4", "p_c", "Q_h", "T_h", "T_l")


@dataclass(frozen=True)
class Dataset:
    """Numeric table plus group keys; column order fixed by NUMERIC_COLUMNS."""

    values: np.ndarray  # shape (n, 19)
    groups: np.ndarray  # group key strings, shape (n,)

    def __len__(self) -> int:
        return self.values.shape[0]

    def column(self, name: str) -> np.ndarray:
        return self.values[:, NUMERIC_COLUMNS.index(name)]

    @property
    def ratio(self) -> np.ndarray:
        return self.column("ratio")

    def features(self, mapping: str) -> np.ndarray:
        """Feature matrix for one mapping id, columns in the mapping's order."""
        names = MAPPINGS[mapping]
        idx = [NUMERIC_COLUMNS.index(n) for n in names]
        return self.values[:, idx]


def load_dataset(path) -> Dataset:
    """Read a dataset file; raises ValueError on a schema mismatch."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(header) != COLUMNS:
            missing = [] if header is None else [c for c in COLUMNS if c not in header]
            raise ValueError(f"unexpected dataset header; missing columns: {missing}")
        values = []
        groups = []
        for row in reader:
            values.append([float(x) for x in row[:19]])
            groups.append(row[19])
    return Dataset(values=np.asarray(values, dtype=float), groups=np.asarray(groups))
