"""Assembly of the training programs shared by every kernel trainer.

The variable vector is ``(w, u, xi)``: ``n_w`` classifier coefficients, ``n_u``
rejector coefficients (zero for rejector-free methods) and one slack per loss
sample. A sample's discriminant and rejector values are ``h_i = K_i . w`` and
``r_i = K_i . u`` where ``K_i`` is its row of the design matrix. Each
:py:class:`ConstraintRow` encodes one lower bound on a slack,

    xi_i >= offset + h_scale * h_i + r_scale * r_i

and a row with every coefficient zero is the nonnegativity bound ``xi_i >= 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import QpDimensionError

from .problem import QpProblem

LOGGER: BoundLogger = structlog.stdlib.get_logger()


@dataclass(frozen=True)
class ConstraintRow:
    sample: int
    offset: float = 0.0
    h_scale: float = 0.0
    r_scale: float = 0.0

    @classmethod
    def nonnegative(cls, sample: int) -> "ConstraintRow":
        return cls(sample=sample)


def assemble_training_qp(
    design: np.ndarray,
    rows: Sequence[ConstraintRow],
    n_u: int,
    lam: float,
    lam_prime: float = 0.0,
    slack_weights: Optional[np.ndarray] = None,
    w_quadratic: Optional[np.ndarray] = None,
) -> QpProblem:
    """Builds ``min lam/2 |w|^2 + lam'/2 |u|^2 + sum_i weight_i xi_i`` over the rows.

    Args:
        design: The ``(N, n_w)`` design matrix of the loss samples against the basis.
        rows: The slack lower bounds, in the order they become rows of ``G``.
        n_u: The rejector size, either ``0`` or the basis size ``n_w``.
        lam: Classifier regularization, must be positive.
        lam_prime: Rejector regularization, must be nonnegative.
        slack_weights: Per-sample slack weights. Defaults to ``1/N`` for every
            sample.
        w_quadratic: An extra ``(n_w, n_w)`` PSD block added to the classifier part of
            ``P``, such as a graph Laplacian penalty.

    Returns:
        The assembled program.
    """
    design = np.asarray(design, dtype=float)

    if design.ndim != 2:
        raise QpDimensionError(
            f"The design matrix must be two-dimensional, got shape {design.shape}."
        )

    n_samples, n_w = design.shape

    if n_u not in (0, n_w):
        raise QpDimensionError(
            f"The rejector size must be 0 or the basis size {n_w}, got {n_u}."
        )

    if lam <= 0 or lam_prime < 0:
        raise ValueError(
            f"Regularization must satisfy lam > 0 and lam' >= 0, got "
            f"({lam!r}, {lam_prime!r})."
        )

    if slack_weights is None:
        slack_weights = np.full(n_samples, 1.0 / n_samples)

    slack_weights = np.asarray(slack_weights, dtype=float).reshape(-1)

    if slack_weights.shape[0] != n_samples:
        raise QpDimensionError(
            f"Expected {n_samples} slack weights, got {slack_weights.shape[0]}."
        )

    n = n_w + n_u + n_samples
    P = np.zeros((n, n))
    P[:n_w, :n_w] = lam * np.eye(n_w)

    if w_quadratic is not None:
        w_quadratic = np.asarray(w_quadratic, dtype=float)

        if w_quadratic.shape != (n_w, n_w):
            raise QpDimensionError(
                f"The extra quadratic block must be {n_w}x{n_w}, got "
                f"{w_quadratic.shape}."
            )

        P[:n_w, :n_w] += w_quadratic

    if n_u:
        P[n_w : n_w + n_u, n_w : n_w + n_u] = lam_prime * np.eye(n_u)

    q = np.zeros(n)
    q[n_w + n_u :] = slack_weights

    G = np.zeros((len(rows), n))
    h = np.zeros(len(rows))

    for index, row in enumerate(rows):
        if not 0 <= row.sample < n_samples:
            raise QpDimensionError(
                f"Constraint row {index} references sample {row.sample}, but only "
                f"{n_samples} samples are in the design matrix."
            )

        if row.r_scale != 0.0 and n_u == 0:
            raise QpDimensionError(
                f"Constraint row {index} uses the rejector, but n_u is zero."
            )

        K_i = design[row.sample]
        G[index, :n_w] = row.h_scale * K_i

        if n_u:
            G[index, n_w : n_w + n_u] = row.r_scale * K_i

        G[index, n_w + n_u + row.sample] = -1.0
        h[index] = -row.offset

    LOGGER.debug(
        "Training program assembled",
        n_w=n_w,
        n_u=n_u,
        n_samples=n_samples,
        n_rows=len(rows),
    )

    return QpProblem(P=P, q=q, G=G, h=h)
