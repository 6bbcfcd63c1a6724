from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.datasets import ClassCounts, Dataset, LabeledSample
from abstain.sdk.exceptions import InvalidDatasetError
from abstain.sdk.losses import TernaryLabel


@pytest.fixture
def small_dataset() -> Dataset:
    return Dataset(
        features=[[0.0, 1.0], [1.0, 0.5], [0.25, 0.75], [0.5, 0.5]],
        labels=[1, 0, -1, 1],
        name="small",
    )


def test_samples_pair_rows_with_ternary_labels(small_dataset) -> None:
    samples = small_dataset.samples

    assert len(samples) == len(small_dataset) == 4
    assert [sample.label for sample in samples] == [
        TernaryLabel.POSITIVE,
        TernaryLabel.AMBIGUOUS,
        TernaryLabel.NEGATIVE,
        TernaryLabel.POSITIVE,
    ]
    np.testing.assert_array_equal(samples[2].features, [0.25, 0.75])


def test_from_samples_restores_the_arrays(small_dataset) -> None:
    rebuilt = Dataset.from_samples(small_dataset.samples, name="rebuilt")

    np.testing.assert_array_equal(rebuilt.features, small_dataset.features)
    np.testing.assert_array_equal(rebuilt.labels, small_dataset.labels)
    assert rebuilt.name == "rebuilt"
    assert rebuilt.counts() == ClassCounts(positive=2, negative=1, ambiguous=1)


def test_from_samples_accepts_plain_values() -> None:
    dataset = Dataset.from_samples(
        [LabeledSample(np.array([1.0]), TernaryLabel(0)), ([2.0], -1)]
    )

    assert dataset.feature_dim == 1
    np.testing.assert_array_equal(dataset.labels, [0, -1])


def test_from_samples_needs_a_sample() -> None:
    with pytest.raises(InvalidDatasetError):
        Dataset.from_samples([])


def test_arrays_are_read_only(small_dataset) -> None:
    with pytest.raises(ValueError):
        small_dataset.features[0, 0] = 5.0

    with pytest.raises(ValueError):
        small_dataset.labels[0] = -1


@pytest.mark.parametrize(
    ("features", "labels"),
    [
        ([1.0, 2.0], [1, -1]),
        ([[1.0], [2.0]], [1]),
        ([[1.0], [2.0]], [1, 2]),
        ([[1.0], [np.nan]], [1, -1]),
    ],
)
def test_invalid_datasets(features, labels) -> None:
    with pytest.raises(InvalidDatasetError):
        Dataset(features=features, labels=labels)
