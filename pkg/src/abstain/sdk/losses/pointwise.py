"""Pointwise losses for classification with rejection and ambiguous labels.

Every function accepts scalars or equally-shaped arrays for ``h``, ``r`` and ``y``
and returns a float for scalar input or an array otherwise. Boundaries follow the
indicator conventions ``y*h <= 0`` (error), ``r > 0`` (accept) and ``r <= 0``
(reject).
"""
from __future__ import annotations

from typing import Union

import numpy as np
import numpy.typing as npt

from abstain.sdk.exceptions import InvalidLabelError, InvalidLossParamsError

from .params import LossParams

LossValue = Union[float, np.ndarray]


def loss_01(h: npt.ArrayLike, y: npt.ArrayLike) -> LossValue:
    h_arr, y_arr = _as_arrays(h, y)
    _require_binary(y_arr)

    return _as_output(np.where(y_arr * h_arr <= 0, 1.0, 0.0))


def loss_hinge(h: npt.ArrayLike, y: npt.ArrayLike) -> LossValue:
    h_arr, y_arr = _as_arrays(h, y)
    _require_binary(y_arr)

    return _as_output(np.maximum(1.0 - y_arr * h_arr, 0.0))


def loss_01c(
    h: npt.ArrayLike, r: npt.ArrayLike, y: npt.ArrayLike, c: float
) -> LossValue:
    """The 0-1 loss with rejection at cost ``c`` for positive and negative labels."""
    h_arr, r_arr, y_arr = _as_arrays(h, r, y)
    _require_binary(y_arr)
    _require_cost(c)

    accepted_error = np.where((y_arr * h_arr <= 0) & (r_arr > 0), 1.0, 0.0)

    return _as_output(accepted_error + c * np.where(r_arr <= 0, 1.0, 0.0))


def loss_01cd(
    h: npt.ArrayLike, r: npt.ArrayLike, y: npt.ArrayLike, params: LossParams
) -> LossValue:
    """The 0-1-c-d loss over ternary labels.

    Positive and negative samples pay 1 for an accepted error and ``c`` when
    rejected. Ambiguous samples pay ``d`` when accepted and nothing when rejected.
    """
    h_arr, r_arr, y_arr = _as_arrays(h, r, y)
    _require_ternary(y_arr)

    y_sq = y_arr * y_arr
    accepted = r_arr > 0
    binary_part = np.where((y_arr * h_arr <= 0) & accepted, 1.0, 0.0) + params.c * (
        np.where(accepted, 0.0, 1.0)
    )
    ambiguous_part = params.d * np.where((y_arr == 0) & accepted, 1.0, 0.0)

    return _as_output(y_sq * binary_part + ambiguous_part)


def loss_mh(
    h: npt.ArrayLike, r: npt.ArrayLike, y: npt.ArrayLike, params: LossParams
) -> LossValue:
    """The max-hinge surrogate of :py:func:`loss_01c`; ``eta`` plays no part."""
    h_arr, r_arr, y_arr = _as_arrays(h, r, y)
    _require_binary(y_arr)

    return _as_output(_binary_branch(h_arr, r_arr, y_arr, params, scale=1.0))


def loss_mha(
    h: npt.ArrayLike, r: npt.ArrayLike, y: npt.ArrayLike, params: LossParams
) -> LossValue:
    """The max-hinge-ambiguous surrogate of :py:func:`loss_01cd`.

    ``y^2 max(1 + alpha/2 (r - y h), eta c (1 - beta r), 0)
    + (1 - y^2) max(eta d (1 + beta r), 0)``
    """
    h_arr, r_arr, y_arr = _as_arrays(h, r, y)
    _require_ternary(y_arr)

    y_sq = y_arr * y_arr
    binary_part = _binary_branch(h_arr, r_arr, y_arr, params, scale=params.eta)
    ambiguous_part = np.maximum(
        params.eta * params.d * (1.0 + params.beta * r_arr), 0.0
    )

    return _as_output(y_sq * binary_part + (1.0 - y_sq) * ambiguous_part)


def _binary_branch(
    h: np.ndarray, r: np.ndarray, y: np.ndarray, params: LossParams, scale: float
) -> np.ndarray:
    margin = 1.0 + 0.5 * params.alpha * (r - y * h)
    rejection = scale * params.c * (1.0 - params.beta * r)

    return np.maximum(np.maximum(margin, rejection), 0.0)


def _as_arrays(*values: npt.ArrayLike) -> tuple:
    arrays = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in values))

    return tuple(arrays)


def _as_output(value: np.ndarray) -> LossValue:
    if value.ndim == 0:
        return float(value)

    return value


def _require_binary(y: np.ndarray) -> None:
    if not np.all(np.isin(y, (-1.0, 1.0))):
        raise InvalidLabelError(
            "This loss accepts only positive (+1) and negative (-1) labels, got "
            f"{sorted(set(np.unique(y).tolist()))!r}."
        )


def _require_ternary(y: np.ndarray) -> None:
    if not np.all(np.isin(y, (-1.0, 0.0, 1.0))):
        raise InvalidLabelError(
            "Labels must lie in {+1, 0, -1}, got "
            f"{sorted(set(np.unique(y).tolist()))!r}."
        )


def _require_cost(c: float) -> None:
    if not 0.0 < c < 0.5:
        raise InvalidLossParamsError(
            f"The rejection cost c must lie in (0, 0.5), got {c!r}."
        )
