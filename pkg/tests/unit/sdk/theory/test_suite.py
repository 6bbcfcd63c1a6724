from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.theory import Regime, TheoryCheckResult, regime_point, run_theory_suite
from abstain.sdk.theory.suite import check_lemma1, check_theorem1, search_grid
from abstain.sdk.utilities.random import init_rng

CHECK_NAMES = ["lemma1", "theorem1", "theorem2", "theorem3", "theorem4", "mha_bound"]


@pytest.fixture(scope="module")
def small_suite() -> list:
    return run_theory_suite(
        step=0.05,
        posteriors=4,
        grid_step=0.02,
        seed=3,
        bound_samples=2_000,
        gap_samples=200,
    )


@pytest.mark.slow
def test_small_suite_passes(small_suite) -> None:
    assert [result.name for result in small_suite] == CHECK_NAMES
    assert all(result.passed for result in small_suite), [
        str(result) for result in small_suite
    ]
    assert all(result.n > 0 for result in small_suite)


@pytest.mark.slow
def test_miscalibrated_scale_fails_the_minimizer_check() -> None:
    results = run_theory_suite(
        step=0.1,
        posteriors=10,
        grid_step=0.02,
        seed=3,
        eta=3.0,
        bound_samples=100,
        gap_samples=10,
    )
    by_name = {result.name: result for result in results}

    assert not by_name["theorem1"].passed
    assert "eta=3" in by_name["theorem1"].counterexample
    assert by_name["lemma1"].passed and by_name["mha_bound"].passed


def test_result_line() -> None:
    assert str(TheoryCheckResult("lemma1", True, 12)) == "lemma1: PASS (n=12)"
    assert str(TheoryCheckResult("theorem2", False, 3, "h=1")) == (
        "theorem2: FAIL (n=3) counterexample: h=1"
    )


def test_lemma1_sweep_passes() -> None:
    result = check_lemma1(0.01)

    assert result.passed, str(result)
    assert result.n > 0


@pytest.mark.parametrize("c", [0.03, 0.2, 0.45, 0.49])
def test_search_grid_covers_closed_form_points(c) -> None:
    H, R = search_grid(c, grid_step=0.05)

    for regime in Regime:
        h_star, r_star = regime_point(regime, c)

        assert H.min() < h_star < H.max()
        assert R.min() < r_star < R.max()

    assert H.min() <= -6.0 and H.max() >= 6.0
    assert np.allclose(np.diff(H[:, 0]), 0.05)


def test_minimizer_check_passes_at_largest_rejection_cost() -> None:
    _, rng = init_rng(5)
    result = check_theorem1(rng, posteriors=6, grid_step=0.05, c_values=(0.45,))

    assert result.passed, str(result)
    assert result.n == 6
