from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.datasets import build_pd1, build_pd2, build_pd3, load_regression_csv
from abstain.sdk.exceptions import DatasetConstructionError, DatasetParseError


@pytest.fixture
def housing_table():
    rng = np.random.default_rng(8)
    features = rng.lognormal(sigma=1.0, size=(506, 4))
    targets = rng.uniform(10.0, 35.0, size=506)

    return features, targets


def test_pd1_bands_use_strict_thresholds() -> None:
    targets = np.array([24.0, 23.0, 19.0, 18.9, 20.0])
    data = build_pd1(np.zeros((5, 1)), targets)

    assert data.labels.tolist() == [1, 0, 0, -1, 0]
    assert data.name == "pd1"


def test_pd2_relabels_only_the_middle_band(housing_table) -> None:
    features, targets = housing_table
    pd1 = build_pd1(features, targets)
    pd2 = build_pd2(features, targets, seed=1)
    outer = pd1.labels != 0

    assert np.array_equal(pd1.labels[outer], pd2.labels[outer])
    assert set(pd2.labels[~outer].tolist()) == {-1, 0, 1}
    assert np.array_equal(pd2.labels, build_pd2(features, targets, seed=1).labels)


def test_pd3_parts(housing_table) -> None:
    features, targets = housing_table
    data = build_pd3(features, targets, seed=2)
    rule = np.where(targets > 21.0, 1, -1)

    assert data.name == "pd3"
    assert len(data) == 506
    assert data.counts().ambiguous > 0
    assert int(np.sum(data.labels == rule)) >= 155
    assert np.array_equal(data.labels, build_pd3(features, targets, seed=2).labels)


def test_pd3_gives_up_after_its_budget(housing_table) -> None:
    features, targets = housing_table

    with pytest.raises(DatasetConstructionError):
        build_pd3(
            features,
            targets,
            seed=2,
            size_tolerance=0,
            mean_tolerance=0.0,
            budget=5,
        )


def test_load_regression_csv_with_header(tmp_path) -> None:
    path = tmp_path / "housing.csv"
    path.write_text("crim,rm,medv\n0.1,6.5,24.0\n0.2, 5.9 ,18.0\n")
    features, targets = load_regression_csv(path)

    np.testing.assert_allclose(features, [[0.1, 6.5], [0.2, 5.9]])
    np.testing.assert_allclose(targets, [24.0, 18.0])


@pytest.mark.parametrize(
    ("content", "message"),
    [
        ("", "empty"),
        ("a,b\n", "no data rows"),
        ("1.0\n2.0\n", "at least one feature"),
        ("1.0,2.0\n3.0,x\n", "line 2, column 2"),
    ],
)
def test_malformed_regression_tables(tmp_path, content, message) -> None:
    path = tmp_path / "housing.csv"
    path.write_text(content)

    with pytest.raises(DatasetParseError, match=message):
        load_regression_csv(path)


def test_mismatched_rows() -> None:
    with pytest.raises(DatasetConstructionError):
        build_pd1(np.zeros((3, 2)), np.zeros(4))
