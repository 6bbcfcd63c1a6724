from __future__ import annotations

from typing import NamedTuple

import numpy as np
import numpy.typing as npt
from scipy import stats

from abstain.sdk.exceptions import InsufficientRunsError

SIGNIFICANCE_LEVEL = 0.05


class WelchTestResult(NamedTuple):
    statistic: float
    significant: bool
    p_value: float


def welch_t_test(
    a: npt.ArrayLike, b: npt.ArrayLike, level: float = SIGNIFICANCE_LEVEL
) -> WelchTestResult:
    """Two-sided unequal-variance t-test of the means of two accuracy samples.

    When both samples are constant the statistic is ``0`` (not significant) for
    equal values and ``+-inf`` (significant) otherwise. Constant samples are
    detected by their range, not by their computed variance.

    Raises:
        InsufficientRunsError: If either sample has fewer than two values.
    """
    a_arr = np.asarray(a, dtype=float).reshape(-1)
    b_arr = np.asarray(b, dtype=float).reshape(-1)

    if a_arr.size < 2 or b_arr.size < 2:
        raise InsufficientRunsError(
            f"A t-test needs at least 2 values per sample, got {a_arr.size} and "
            f"{b_arr.size}."
        )

    if np.ptp(a_arr) == 0.0 and np.ptp(b_arr) == 0.0:
        difference = float(a_arr[0] - b_arr[0])

        if difference == 0.0:
            return WelchTestResult(statistic=0.0, significant=False, p_value=1.0)

        return WelchTestResult(
            statistic=float(np.copysign(np.inf, difference)),
            significant=True,
            p_value=0.0,
        )

    statistic, p_value = stats.ttest_ind(a_arr, b_arr, equal_var=False)

    return WelchTestResult(
        statistic=float(statistic),
        significant=bool(p_value < level),
        p_value=float(p_value),
    )
