from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.exceptions import InvalidPosteriorError
from abstain.sdk.theory import ClassPosterior, random_posteriors, simplex_grid
from abstain.sdk.utilities.random import init_rng


@pytest.mark.parametrize(
    "values", [(0.5, 0.5, 0.5), (-0.1, 0.6, 0.5), (1.2, 0.0, -0.2), (0.3, 0.3, 0.3)]
)
def test_invalid_posteriors(values) -> None:
    with pytest.raises(InvalidPosteriorError):
        ClassPosterior(*values)


def test_posterior_from_two_masses() -> None:
    posterior = ClassPosterior.from_positive_negative(0.25, 0.5)

    assert posterior.as_tuple() == (0.25, 0.25, 0.5)
    assert posterior.swapped().as_tuple() == (0.5, 0.25, 0.25)
    assert str(posterior) == "(0.25, 0.25, 0.5)"


def test_simplex_grid_covers_the_triangle() -> None:
    pi_plus, pi_zero, pi_minus = simplex_grid(0.5)

    assert len(pi_plus) == 6
    np.testing.assert_allclose(pi_plus + pi_zero + pi_minus, 1.0)
    assert np.all(pi_zero >= 0.0)


@pytest.mark.parametrize("step", [0.0, -0.1, 1.5])
def test_simplex_grid_rejects_bad_steps(step) -> None:
    with pytest.raises(ValueError):
        simplex_grid(step)


def test_random_posteriors_are_valid_and_seeded() -> None:
    first = random_posteriors(init_rng(5)[1], 50)
    second = random_posteriors(init_rng(5)[1], 50)

    assert first == second
    assert all(isinstance(p, ClassPosterior) for p in first)
