from __future__ import annotations

import numpy as np
import pytest
from scipy.spatial.distance import pdist

from abstain.sdk.datasets import Dataset, project_pca
from abstain.sdk.exceptions import InvalidDatasetError


def test_two_dimensional_input_is_rotated(toy_data) -> None:
    projected = project_pca(toy_data)

    np.testing.assert_allclose(pdist(projected), pdist(toy_data.features), atol=1e-9)


def test_variances_are_nonincreasing() -> None:
    rng = np.random.default_rng(3)
    features = rng.normal(size=(200, 5)) * np.array([0.5, 3.0, 1.0, 2.0, 0.1])
    projected = project_pca(Dataset(features=features, labels=np.ones(200)), 2)
    variances = projected.var(axis=0)

    assert variances[0] >= variances[1]
    np.testing.assert_allclose(projected.mean(axis=0), 0.0, atol=1e-12)


def test_matches_an_independent_eigendecomposition() -> None:
    rng = np.random.default_rng(4)
    features = rng.normal(size=(60, 13)) @ rng.normal(size=(13, 13))
    data = Dataset(features=features, labels=np.zeros(60))
    projected = project_pca(data)

    centered = features - features.mean(axis=0)
    covariance = centered.T @ centered / (len(features) - 1)
    eigenvalues, eigenvectors = np.linalg.eig(covariance)
    top = eigenvectors[:, np.argsort(eigenvalues.real)[::-1][:2]].real

    for column in range(2):
        expected = centered @ top[:, column]
        assert min(
            np.abs(projected[:, column] - expected).max(),
            np.abs(projected[:, column] + expected).max(),
        ) < 1e-8


def test_too_few_features() -> None:
    with pytest.raises(InvalidDatasetError):
        project_pca(Dataset(features=np.zeros((4, 1)), labels=np.zeros(4)))
