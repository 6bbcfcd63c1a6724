"""Gaussian radial basis expansions centered on training inputs."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import cdist

from abstain.sdk.exceptions import InvalidKernelWidthError, KernelDimensionError


@dataclass(frozen=True)
class BasisSet:
    """Basis functions ``phi_j(x) = exp(-|x - x_j|^2 / (2 sigma^2))``.

    Attributes:
        centers: The ``(N, D)`` matrix of centers, one training input per row.
        sigma: The Gaussian width.
    """

    centers: np.ndarray
    sigma: float

    def __post_init__(self) -> None:
        centers = np.atleast_2d(np.asarray(self.centers, dtype=float))

        if centers.shape[0] == 0 or centers.shape[1] == 0:
            raise KernelDimensionError("A basis needs at least one nonempty center.")

        if not self.sigma > 0:
            raise InvalidKernelWidthError(
                f"The Gaussian width must be positive, got {self.sigma!r}."
            )

        centers.setflags(write=False)
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "sigma", float(self.sigma))

    @property
    def size(self) -> int:
        return int(self.centers.shape[0])

    @property
    def feature_dim(self) -> int:
        return int(self.centers.shape[1])


def design_matrix(basis: BasisSet, points: npt.ArrayLike) -> np.ndarray:
    """Evaluates every basis function at every point.

    Args:
        basis: The basis to evaluate.
        points: A ``(M, D)`` array of points, or a single ``(D,)`` point.

    Returns:
        The ``(M, N)`` matrix whose entry ``(i, j)`` is ``phi_j(points[i])``.
    """
    points_arr = np.atleast_2d(np.asarray(points, dtype=float))

    if points_arr.shape[1] != basis.feature_dim:
        raise KernelDimensionError(
            f"Points have dimension {points_arr.shape[1]}, but the basis centers "
            f"have dimension {basis.feature_dim}."
        )

    sq_dists = cdist(points_arr, basis.centers, metric="sqeuclidean")

    return np.exp(-sq_dists / (2.0 * basis.sigma**2))
