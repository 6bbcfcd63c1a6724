"""Dense convex quadratic programs in standard inequality form.

A program minimizes ``0.5 * z'Pz + q'z`` subject to ``Gz <= h``. Every trainer in
:py:mod:`abstain.sdk.models` reduces to this form.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import numpy.typing as npt
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import QpDimensionError, QpNotConvexError

LOGGER: BoundLogger = structlog.stdlib.get_logger()

PSD_CHECK_MAX_DIM = 500
PSD_TOLERANCE = 1e-8
SYMMETRY_TOLERANCE = 1e-10


class SolverStatus(str, enum.Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    NUMERICAL_FAILURE = "numerical_failure"


@dataclass(frozen=True)
class QpProblem:
    """A convex QP ``min 0.5 z'Pz + q'z  s.t.  Gz <= h``.

    ``P`` is symmetrized on construction. The positive-semidefiniteness check runs
    only when ``n <= 500``.

    Attributes:
        P: The ``(n, n)`` quadratic term.
        q: The ``(n,)`` linear term.
        G: The ``(m, n)`` inequality matrix. ``m`` may be zero.
        h: The ``(m,)`` inequality right-hand side.
    """

    P: np.ndarray
    q: np.ndarray
    G: np.ndarray
    h: np.ndarray

    def __post_init__(self) -> None:
        P = np.atleast_2d(np.asarray(self.P, dtype=float))
        q = np.asarray(self.q, dtype=float).reshape(-1)
        n = q.shape[0]
        G = np.asarray(self.G, dtype=float)
        h = np.asarray(self.h, dtype=float).reshape(-1)

        if G.size == 0:
            G = np.zeros((0, n))

        if G.ndim != 2 or G.shape[1] != n:
            raise QpDimensionError(
                f"G must have {n} columns to match len(q)={n}, got shape {G.shape}."
            )

        if P.shape != (n, n):
            raise QpDimensionError(
                f"P must be {n}x{n} to match len(q)={n}, got shape {P.shape}."
            )

        if G.shape[0] != h.shape[0]:
            raise QpDimensionError(
                f"G has {G.shape[0]} rows but h has length {h.shape[0]}."
            )

        P = 0.5 * (P + P.T)

        if n <= PSD_CHECK_MAX_DIM and n > 0:
            min_eig = float(np.linalg.eigvalsh(P).min())

            if min_eig < -PSD_TOLERANCE:
                raise QpNotConvexError(
                    f"P has a negative eigenvalue {min_eig!r} below "
                    f"{-PSD_TOLERANCE!r}."
                )

        object.__setattr__(self, "P", P)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "h", h)

    @classmethod
    def create(
        cls,
        P: npt.ArrayLike,
        q: npt.ArrayLike,
        G: Optional[npt.ArrayLike] = None,
        h: Optional[npt.ArrayLike] = None,
    ) -> "QpProblem":
        """Builds a program, treating a missing ``G``/``h`` pair as unconstrained."""
        q_arr = np.asarray(q, dtype=float).reshape(-1)

        if G is None or h is None:
            if G is not None or h is not None:
                raise QpDimensionError("G and h must be given together.")

            G = np.zeros((0, q_arr.shape[0]))
            h = np.zeros(0)

        return cls(
            P=np.asarray(P, dtype=float),
            q=q_arr,
            G=np.asarray(G, dtype=float),
            h=np.asarray(h, dtype=float),
        )

    @property
    def n(self) -> int:
        return int(self.q.shape[0])

    @property
    def m(self) -> int:
        return int(self.h.shape[0])

    def objective(self, z: np.ndarray) -> float:
        return float(0.5 * z @ self.P @ z + self.q @ z)

    def kkt_residual(self, z: np.ndarray, duals: np.ndarray) -> float:
        """Max-norm of stationarity, primal infeasibility and complementarity."""
        stationarity = self.P @ z + self.q + self.G.T @ duals
        slack = self.G @ z - self.h
        parts = [np.abs(stationarity).max(initial=0.0)]

        if self.m:
            parts.append(np.maximum(slack, 0.0).max(initial=0.0))
            parts.append(np.abs(duals * slack).max(initial=0.0))

        return float(max(parts))


@dataclass(frozen=True)
class QpSolution:
    z: np.ndarray
    duals: np.ndarray
    objective: float
    kkt_residual: float
    status: SolverStatus
    iterations: int = field(default=0)

    @property
    def converged(self) -> bool:
        return self.status is SolverStatus.CONVERGED
