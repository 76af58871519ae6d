from __future__ import annotations

import numpy as np
import pytest

from mlharness import MAPPINGS, NUMERIC_COLUMNS, load_dataset
from mlharness.data import FEATURE_COLUMNS, IMPORTANCE_COLUMNS, LOGIT_FEATURES


def test_load_dataset_shape_and_groups(desk_data):
    dev = desk_data["dev"]
    assert dev.values.shape == (len(dev), 19)
    assert dev.groups.shape == (len(dev),)
    assert np.isfinite(dev.values).all()


def test_load_dataset_rejects_wrong_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(ValueError, match="missing columns"):
        load_dataset(path)


def test_mapping_features_exist_in_schema():
    for names in MAPPINGS.values():
        for name in names:
            assert name in NUMERIC_COLUMNS


def test_feature_matrix_column_order(desk_data):
    dev = desk_data["dev"]
    X = dev.features("f_6")
    for j, name in enumerate(MAPPINGS["f_6"]):
        assert np.array_equal(X[:, j], dev.column(name))


def test_feature_column_partitions():
    assert len(FEATURE_COLUMNS) == 16
    assert len(IMPORTANCE_COLUMNS) == 18
    assert set(LOGIT_FEATURES) <= set(IMPORTANCE_COLUMNS)
    assert MAPPINGS["f_Full"] == FEATURE_COLUMNS
