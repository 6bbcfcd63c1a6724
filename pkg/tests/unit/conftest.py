from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.datasets import Dataset, ToyConfig, generate_toy


@pytest.fixture
def toy_data() -> Dataset:
    return generate_toy(ToyConfig(r=0.5, total=80, seed=3))


@pytest.fixture
def separable_data() -> Dataset:
    """Two well separated blobs, 10 samples each."""
    rng = np.random.default_rng(11)
    positives = rng.normal(loc=(2.0, 2.0), scale=0.3, size=(10, 2))
    negatives = rng.normal(loc=(-2.0, -2.0), scale=0.3, size=(10, 2))

    return Dataset(
        features=np.vstack([positives, negatives]),
        labels=np.array([1] * 10 + [-1] * 10),
        name="blobs",
    )


@pytest.fixture
def ternary_data() -> Dataset:
    """The blobs plus an ambiguous cluster between them."""
    rng = np.random.default_rng(12)
    positives = rng.normal(loc=(2.0, 2.0), scale=0.3, size=(10, 2))
    negatives = rng.normal(loc=(-2.0, -2.0), scale=0.3, size=(10, 2))
    ambiguous = rng.normal(loc=(0.0, 0.0), scale=0.3, size=(8, 2))

    return Dataset(
        features=np.vstack([positives, negatives, ambiguous]),
        labels=np.array([1] * 10 + [-1] * 10 + [0] * 8),
        name="blobs-ambiguous",
    )
