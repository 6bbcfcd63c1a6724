from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.datasets import Dataset, split
from abstain.sdk.exceptions import InvalidDatasetError


def test_stratified_counts(toy_data) -> None:
    train, test = split(toy_data, ratio=1 / 3, seed=4)
    counts = toy_data.counts()

    assert len(train) + len(test) == len(toy_data)

    for label, total in zip((1, -1, 0), counts):
        expected = int(np.floor(total / 3 + 0.5))
        assert int(np.sum(train.labels == label)) == expected

    assert train.name.endswith("-train") and test.name.endswith("-test")


def test_parts_are_disjoint_and_cover_the_data(toy_data) -> None:
    train, test = split(toy_data, seed=5)
    rows = {tuple(x) for x in np.vstack([train.features, test.features])}

    assert len(rows) == len(toy_data)


def test_seeded_split_is_reproducible(toy_data) -> None:
    first, _ = split(toy_data, seed=6)
    second, _ = split(toy_data, seed=6)

    assert np.array_equal(first.features, second.features)


def test_tiny_classes_go_to_training() -> None:
    data = Dataset(features=np.arange(5.0).reshape(-1, 1), labels=[1, 1, 1, -1, 0])
    train, test = split(data, ratio=0.5, seed=0)

    assert set(train.labels.tolist()) >= {-1, 0}
    assert np.all(test.labels == 1) and len(test) >= 1


@pytest.mark.parametrize("ratio", [0.0, 1.0, -0.2])
def test_ratio_must_be_open_fraction(toy_data, ratio) -> None:
    with pytest.raises(InvalidDatasetError):
        split(toy_data, ratio=ratio)
