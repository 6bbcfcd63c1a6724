from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import pdist, squareform

from abstain.sdk.exceptions import InvalidKernelWidthError, KernelDimensionError


@dataclass(frozen=True)
class GraphLaplacian:
    """The unnormalized Laplacian ``L = D - W`` of a complete heat-kernel graph."""

    L: np.ndarray
    sigma_prime: float

    def smoothness(self, f: npt.ArrayLike) -> float:
        """Returns ``f' L f``, half the weighted sum of squared differences."""
        f_arr = np.asarray(f, dtype=float)

        return float(f_arr @ self.L @ f_arr)


def graph_laplacian(points: npt.ArrayLike, sigma_prime: float) -> GraphLaplacian:
    """Builds the Laplacian with weights ``exp(-|x_i - x_j|^2 / (2 sigma'^2))``.

    Self-loops are excluded, ``W_ii = 0``, and every pair is connected.
    """
    points_arr = np.atleast_2d(np.asarray(points, dtype=float))

    if points_arr.shape[0] < 2:
        raise KernelDimensionError(
            f"A graph Laplacian needs at least 2 points, got {points_arr.shape[0]}."
        )

    if not sigma_prime > 0:
        raise InvalidKernelWidthError(
            f"The graph weight width must be positive, got {sigma_prime!r}."
        )

    sq_dists = pdist(points_arr, metric="sqeuclidean")
    W = squareform(np.exp(-sq_dists / (2.0 * sigma_prime**2)))
    L = np.diag(W.sum(axis=1)) - W

    return GraphLaplacian(L=L, sigma_prime=float(sigma_prime))
