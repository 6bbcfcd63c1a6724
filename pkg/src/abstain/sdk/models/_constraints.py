"""Slack lower bounds of the hinge, max-hinge and max-hinge-ambiguous programs."""
from __future__ import annotations

from typing import List

import numpy as np

from abstain.sdk.losses import LossParams
from abstain.sdk.qp import ConstraintRow


def hinge_rows(targets: np.ndarray) -> List[ConstraintRow]:
    """``xi_i >= 1 - t_i h_i`` and ``xi_i >= 0`` for targets ``t_i`` in ``{+1, -1}``."""
    rows: List[ConstraintRow] = []

    for i, t in enumerate(np.asarray(targets, dtype=float)):
        rows.append(ConstraintRow(sample=i, offset=1.0, h_scale=-t))
        rows.append(ConstraintRow.nonnegative(i))

    return rows


def max_hinge_rows(labels: np.ndarray, params: LossParams) -> List[ConstraintRow]:
    """Rows of the surrogate ``max(1 + alpha/2 (r - y h), eta c (1 - beta r), 0)``.

    Ambiguous samples (``y = 0``) get ``xi_i >= eta d (1 + beta r_i)`` and
    ``xi_i >= 0`` instead. With ``eta = 1`` and no ambiguous samples these are the
    max-hinge rows.
    """
    alpha, beta, eta = params.alpha, params.beta, params.eta
    rows: List[ConstraintRow] = []

    for i, y in enumerate(np.asarray(labels, dtype=float)):
        if y == 0:
            rows.append(
                ConstraintRow(
                    sample=i,
                    offset=eta * params.d,
                    r_scale=eta * params.d * beta,
                )
            )

        else:
            rows.append(
                ConstraintRow(
                    sample=i,
                    offset=1.0,
                    h_scale=-0.5 * alpha * y,
                    r_scale=0.5 * alpha,
                )
            )
            rows.append(
                ConstraintRow(
                    sample=i,
                    offset=eta * params.c,
                    r_scale=-eta * params.c * beta,
                )
            )

        rows.append(ConstraintRow.nonnegative(i))

    return rows
