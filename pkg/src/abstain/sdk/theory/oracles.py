"""Closed-form optimal decisions under the 0-1-c-d loss and its surrogates.

Each function is pure. The ``*_codes`` helpers are vectorized over arrays of
posteriors and return :py:class:`Regime` values as integers.
"""
from __future__ import annotations

from typing import Optional, Tuple

import numpy as np
import numpy.typing as npt

from abstain.sdk.losses import (
    LossParams,
    calibrated_params,
    loss_01c,
    loss_01cd,
    loss_mh,
    loss_mha,
)

from .posterior import ClassPosterior, Regime

RISK_COLUMN_REGIMES: Tuple[Regime, ...] = (
    Regime.ACCEPT_POSITIVE,
    Regime.REJECT,
    Regime.ACCEPT_NEGATIVE,
)


def expected_01cd_risk(
    posterior: ClassPosterior, regime: Regime, c: float, d: float
) -> float:
    """The 0-1-c-d risk at a point when taking the action of ``regime``."""
    risks = expected_01cd_risks(*posterior.as_tuple(), c=c, d=d)

    return float(risks[_REGIME_COLUMN[Regime(regime)]])


def expected_01cd_risks(
    pi_plus: npt.ArrayLike,
    pi_zero: npt.ArrayLike,
    pi_minus: npt.ArrayLike,
    c: float,
    d: float,
) -> np.ndarray:
    """Stacks the expected risk of each action along the last axis.

    Returns:
        An array whose last axis follows :py:data:`RISK_COLUMN_REGIMES` and
        holds ``(d pi_0 + pi_-, c (pi_+ + pi_-), d pi_0 + pi_+)``.
    """
    pp, p0, pm = (np.asarray(p, dtype=float) for p in (pi_plus, pi_zero, pi_minus))

    return np.stack([d * p0 + pm, c * (pp + pm), d * p0 + pp], axis=-1)


def lemma1_optimal_regime(posterior: ClassPosterior, c: float, d: float) -> Regime:
    """Picks the action minimizing the expected 0-1-c-d loss.

    Accept as positive iff ``pi_+ >= (d + (1 - c - d) pi_-) / (c + d)``, accept as
    negative iff ``pi_- >= (d + (1 - c - d) pi_+) / (c + d)``, and reject
    otherwise. For ``0 < c < 1/2`` the two acceptance conditions never hold at
    once.
    """
    code = lemma1_regime_codes(posterior.pi_plus, posterior.pi_minus, c, d)

    return Regime(int(code))


def lemma1_regime_codes(
    pi_plus: npt.ArrayLike, pi_minus: npt.ArrayLike, c: float, d: float
) -> np.ndarray:
    pp = np.asarray(pi_plus, dtype=float)
    pm = np.asarray(pi_minus, dtype=float)
    accept_positive = (c + d) * pp >= d + (1.0 - c - d) * pm
    accept_negative = (c + d) * pm >= d + (1.0 - c - d) * pp

    return np.where(accept_positive, 1, np.where(accept_negative, -1, 0))


def theorem1_minimizer(
    posterior: ClassPosterior, c: float, d: float
) -> Tuple[float, float]:
    """The minimizer of the expected MHA loss under the calibrated surrogate shape.

    Returns ``(+-2 / (1 - 4c^2), 1 / (1 + 2c))`` when accepting and
    ``(0, -1 / (1 + 2c))`` when rejecting; the regime follows
    :py:func:`lemma1_optimal_regime`. The rejecting ``h`` is one of many minimizers.
    """
    return regime_point(lemma1_optimal_regime(posterior, c, d), c)


def regime_point(regime: Regime, c: float) -> Tuple[float, float]:
    h_accept = 2.0 / (1.0 - 4.0 * c * c)
    r_accept = 1.0 / (1.0 + 2.0 * c)

    if regime == Regime.ACCEPT_POSITIVE:
        return h_accept, r_accept

    if regime == Regime.ACCEPT_NEGATIVE:
        return -h_accept, r_accept

    return 0.0, -r_accept


def expected_mha_risk(
    posterior: ClassPosterior,
    h: npt.ArrayLike,
    r: npt.ArrayLike,
    params: LossParams,
) -> np.ndarray:
    """``pi_+ L(h, r, 1) + pi_0 L(h, r, 0) + pi_- L(h, r, -1)`` for the MHA loss."""
    h_arr = np.asarray(h, dtype=float)
    r_arr = np.asarray(r, dtype=float)
    total = np.zeros(np.broadcast(h_arr, r_arr).shape)

    for weight, y in zip(posterior.as_tuple(), (1.0, 0.0, -1.0)):
        if weight > 0.0:
            total = total + weight * np.asarray(loss_mha(h_arr, r_arr, y, params))

    return total


def theorem2_risk_gap(
    posterior: ClassPosterior, h: float, r: float, c: float
) -> float:
    """0-1-c risk on randomly relabeled data minus 0-1-c-d risk with ``d = 1/2 - c``.

    The relabeled distribution has ``Pr(z = 1) = pi_+ + pi_0 / 2``. The gap equals
    ``pi_0 c`` whenever ``h != 0``; at ``h = 0`` with ``r > 0`` both relabelings
    count as errors and the gap is ``pi_0 (1/2 + c)``.
    """
    pp, p0, pm = posterior.as_tuple()
    params = _rl_params(c)
    relabeled = (pp + 0.5 * p0) * loss_01c(h, r, 1, c) + (pm + 0.5 * p0) * loss_01c(
        h, r, -1, c
    )
    ternary = (
        pp * loss_01cd(h, r, 1, params)
        + p0 * loss_01cd(h, r, 0, params)
        + pm * loss_01cd(h, r, -1, params)
    )

    return float(relabeled - ternary)


def theorem3_bound_check(
    h: npt.ArrayLike,
    r: npt.ArrayLike,
    c: float,
    params: Optional[LossParams] = None,
) -> bool:
    """Checks ``(L_MH(h, r, 1) + L_MH(h, r, -1)) / 2 >= L_01cd(h, r, 0)``.

    The right side uses ``d = 1/2 - c``. With arrays, every element must pass.
    """
    params = params if params is not None else _rl_params(c)
    lhs = 0.5 * (
        np.asarray(loss_mh(h, r, 1, params)) + np.asarray(loss_mh(h, r, -1, params))
    )
    rhs = np.asarray(loss_01cd(h, r, 0, params))

    return bool(np.all(lhs >= rhs))


def theorem4_minimizer_check(posterior: ClassPosterior, c: float) -> bool:
    """Compares the relabeled-data max-hinge optimum with the 0-1-c-d optimum.

    On relabeled data the max-hinge loss is calibrated to the 0-1-c loss, whose
    optimum accepts as positive iff ``Pr(z = 1) >= 1 - c``, that is
    ``pi_+ >= (1 - 2c) + pi_-``. The check passes when this regime equals
    :py:func:`lemma1_optimal_regime` at ``d = 1/2 - c``.
    """
    relabeled = relabeled_regime_codes(posterior.pi_plus, posterior.pi_minus, c)
    direct = lemma1_regime_codes(posterior.pi_plus, posterior.pi_minus, c, 0.5 - c)

    return bool(relabeled == direct)


def relabeled_regime_codes(
    pi_plus: npt.ArrayLike, pi_minus: npt.ArrayLike, c: float
) -> np.ndarray:
    pp = np.asarray(pi_plus, dtype=float)
    pm = np.asarray(pi_minus, dtype=float)
    pi_zero = np.maximum(1.0 - pp - pm, 0.0)
    z_plus = pp + 0.5 * pi_zero
    z_minus = pm + 0.5 * pi_zero

    return np.where(z_plus >= 1.0 - c, 1, np.where(z_minus >= 1.0 - c, -1, 0))


def _rl_params(c: float) -> LossParams:
    return calibrated_params(c, 0.5 - c)


_REGIME_COLUMN = {regime: i for i, regime in enumerate(RISK_COLUMN_REGIMES)}
