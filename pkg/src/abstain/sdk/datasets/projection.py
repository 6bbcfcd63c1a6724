from __future__ import annotations

import numpy as np

from abstain.sdk.exceptions import InvalidDatasetError

from .dataset import Dataset


def project_pca(data: Dataset, components: int = 2) -> np.ndarray:
    """Projects the mean-centered features onto the leading covariance eigenvectors.

    Each eigenvector's sign is fixed so that its largest-magnitude entry is
    positive, which makes the projection deterministic.

    Returns:
        The ``(N, components)`` matrix of projected coordinates, columns ordered by
        nonincreasing variance.
    """
    if data.feature_dim < components:
        raise InvalidDatasetError(
            f"A {components}-D projection needs at least {components} features, got "
            f"{data.feature_dim}."
        )

    centered = data.features - data.features.mean(axis=0)
    covariance = np.atleast_2d(np.cov(centered, rowvar=False))
    eigenvalues, eigenvectors = np.linalg.eigh(covariance)
    order = np.argsort(eigenvalues)[::-1][:components]
    axes = eigenvectors[:, order]

    pivots = np.argmax(np.abs(axes), axis=0)
    signs = np.sign(axes[pivots, np.arange(components)])
    axes = axes * np.where(signs == 0, 1.0, signs)

    return centered @ axes
