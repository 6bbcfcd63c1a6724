from __future__ import annotations

import itertools

import numpy as np
import pytest

from abstain.sdk.exceptions import QpDimensionError, QpNotConvexError
from abstain.sdk.qp import QpProblem, SolverStatus, solve_qp


def brute_force_qp(P: np.ndarray, q: np.ndarray, G: np.ndarray, h: np.ndarray):
    """Enumerates active sets of a small strictly convex program."""
    n, m = q.shape[0], h.shape[0]
    best = None

    for size in range(min(n, m) + 1):
        for active in itertools.combinations(range(m), size):
            A = G[list(active)]
            kkt = np.block([[P, A.T], [A, np.zeros((size, size))]])
            rhs = np.concatenate([-q, h[list(active)]])

            try:
                solution = np.linalg.solve(kkt, rhs)

            except np.linalg.LinAlgError:
                continue

            z, duals = solution[:n], solution[n:]

            if np.all(G @ z <= h + 1e-9) and np.all(duals >= -1e-9):
                value = 0.5 * z @ P @ z + q @ z

                if best is None or value < best[1]:
                    best = (z, value)

    return best


def test_unconstrained_program_is_solved_in_closed_form() -> None:
    problem = QpProblem.create(P=np.diag([2.0, 4.0]), q=[-2.0, -4.0])
    solution = solve_qp(problem)

    assert solution.status is SolverStatus.CONVERGED
    np.testing.assert_allclose(solution.z, [1.0, 1.0], atol=1e-10)


def test_single_active_constraint() -> None:
    problem = QpProblem.create(
        P=np.eye(2), q=[-1.0, -1.0], G=[[1.0, 1.0]], h=[1.0]
    )
    solution = solve_qp(problem)

    assert solution.converged
    np.testing.assert_allclose(solution.z, [0.5, 0.5], atol=1e-6)
    np.testing.assert_allclose(solution.duals, [0.5], atol=1e-6)
    assert solution.kkt_residual <= 1e-8


@pytest.mark.parametrize("seed", range(8))
def test_matches_active_set_enumeration(seed) -> None:
    rng = np.random.default_rng(seed)
    n, m = 3, 5
    A = rng.normal(size=(n, n))
    P = A @ A.T + 0.5 * np.eye(n)
    q = rng.normal(size=n)
    G = rng.normal(size=(m, n))
    h = rng.uniform(0.1, 1.0, size=m)

    solution = solve_qp(QpProblem.create(P=P, q=q, G=G, h=h))
    expected_z, expected_value = brute_force_qp(P, q, G, h)

    assert solution.converged
    np.testing.assert_allclose(solution.z, expected_z, atol=1e-5)
    assert np.isclose(solution.objective, expected_value, atol=1e-6)


def test_identical_inputs_give_identical_outputs() -> None:
    rng = np.random.default_rng(4)
    G = rng.normal(size=(6, 3))
    problem = QpProblem.create(P=np.eye(3), q=rng.normal(size=3), G=G, h=np.ones(6))

    first, second = solve_qp(problem), solve_qp(problem)

    assert np.array_equal(first.z, second.z)
    assert first.iterations == second.iterations


@pytest.mark.parametrize("max_iter", [1, 5, 30, 100])
@pytest.mark.parametrize(
    ("G", "h"),
    [
        ([[1.0], [-1.0]], [-1.0, -1.0]),
        ([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]], [-2.0, -2.0, 1.0]),
        ([[1.0], [-1.0]], [-1e150, -1e150]),
    ],
)
def test_infeasible_program_does_not_converge(G, h, max_iter) -> None:
    n = len(G[0])
    problem = QpProblem.create(P=np.eye(n), q=np.zeros(n), G=G, h=h)
    solution = solve_qp(problem, max_iter=max_iter)

    assert solution.status in (
        SolverStatus.MAX_ITERATIONS,
        SolverStatus.NUMERICAL_FAILURE,
    )
    assert solution.iterations <= max_iter


def test_exhausted_budget_is_reported() -> None:
    rng = np.random.default_rng(5)
    problem = QpProblem.create(
        P=np.eye(4), q=rng.normal(size=4), G=rng.normal(size=(10, 4)), h=np.ones(10)
    )

    assert solve_qp(problem, max_iter=1).status is SolverStatus.MAX_ITERATIONS


def test_nonpositive_tolerance_is_rejected() -> None:
    with pytest.raises(ValueError):
        solve_qp(QpProblem.create(P=np.eye(1), q=[0.0]), tol=0.0)


@pytest.mark.parametrize(
    ("P", "q", "G", "h"),
    [
        (np.eye(2), [0.0, 0.0, 0.0], None, None),
        (np.eye(2), [0.0, 0.0], [[1.0, 1.0, 1.0]], [1.0]),
        (np.eye(2), [0.0, 0.0], [[1.0, 1.0]], [1.0, 2.0]),
    ],
)
def test_dimension_mismatch_is_rejected(P, q, G, h) -> None:
    with pytest.raises(QpDimensionError):
        QpProblem.create(P=P, q=q, G=G, h=h)


def test_indefinite_quadratic_term_is_rejected() -> None:
    with pytest.raises(QpNotConvexError):
        QpProblem.create(P=np.diag([1.0, -1.0]), q=[0.0, 0.0])


def test_quadratic_term_is_symmetrized() -> None:
    problem = QpProblem.create(P=[[1.0, 2.0], [0.0, 1.0]], q=[0.0, 0.0])

    np.testing.assert_array_equal(problem.P, [[1.0, 1.0], [1.0, 1.0]])
