from __future__ import annotations

import numpy as np
import pytest
from scipy import stats

from abstain.sdk.exceptions import InsufficientRunsError
from abstain.sdk.evaluation import welch_t_test


def test_matches_unequal_variance_t_test() -> None:
    rng = np.random.default_rng(4)
    a = rng.normal(0.80, 0.02, size=30)
    b = rng.normal(0.78, 0.05, size=25)
    expected = stats.ttest_ind(a, b, equal_var=False)
    result = welch_t_test(a, b)

    assert np.isclose(result.statistic, expected.statistic)
    assert np.isclose(result.p_value, expected.pvalue)
    assert result.significant == (expected.pvalue < 0.05)


def test_clear_difference_is_significant() -> None:
    result = welch_t_test([0.90, 0.91, 0.92, 0.90], [0.50, 0.52, 0.51, 0.50])

    assert result.significant
    assert result.statistic > 0


def test_zero_variance_samples() -> None:
    same = welch_t_test([0.8, 0.8, 0.8], [0.8, 0.8])
    apart = welch_t_test([0.7, 0.7], [0.8, 0.8])

    assert same.statistic == 0.0 and not same.significant
    assert apart.statistic == -np.inf and apart.significant


@pytest.mark.parametrize("value", [0.502, 0.1, 0.7, 0.81, 0.9333333333333333])
@pytest.mark.parametrize(("n1", "n2"), [(5, 7), (3, 3), (10, 4), (50, 50)])
def test_identical_constant_samples_are_not_significant(value, n1, n2) -> None:
    result = welch_t_test([value] * n1, [value] * n2)

    assert result.statistic == 0.0
    assert result.p_value == 1.0
    assert not result.significant


@pytest.mark.parametrize(("a", "b"), [([0.5], [0.5, 0.6]), ([0.5, 0.6], [])])
def test_too_few_values(a, b) -> None:
    with pytest.raises(InsufficientRunsError):
        welch_t_test(a, b)
