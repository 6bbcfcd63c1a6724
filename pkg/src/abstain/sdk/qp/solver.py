"""A primal-dual interior-point solver for dense convex quadratic programs."""
from __future__ import annotations

from typing import Optional, Tuple

import numpy as np
import scipy.linalg
import structlog
from structlog.stdlib import BoundLogger

from .problem import QpProblem, QpSolution, SolverStatus

LOGGER: BoundLogger = structlog.stdlib.get_logger()

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 100
REGULARIZATION_BASE = 1e-10
REGULARIZATION_ESCALATIONS = 3
REGULARIZATION_GROWTH = 100.0
STEP_FRACTION = 0.995

_CholeskyFactor = Tuple[np.ndarray, bool]


def solve_qp(
    problem: QpProblem, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> QpSolution:
    """Solves ``min 0.5 z'Pz + q'z  s.t.  Gz <= h`` with Mehrotra's method.

    Each iteration takes an affine-scaling predictor step, picks the centering
    parameter from the predicted complementarity gap, then solves once more for the
    combined predictor-corrector direction. The Newton systems are reduced to the
    normal equations ``(P + G' diag(duals / slack) G) dz = rhs`` and factored with a
    Cholesky decomposition. A factorization failure is retried with diagonal
    regularization starting at ``1e-10`` (relative to the largest diagonal entry)
    and grown up to three times before the solve is abandoned.

    The solver holds no state between calls and uses no randomness, so identical
    inputs give identical outputs.

    Args:
        problem: The program to solve.
        tol: Required max-norm of the KKT residual (stationarity, primal
            infeasibility and complementarity). Must be positive.
        max_iter: Iteration budget.

    Returns:
        The final iterate. Its status is ``CONVERGED`` when the KKT residual reached
        ``tol``, ``MAX_ITERATIONS`` when the budget ran out first, and
        ``NUMERICAL_FAILURE`` when a linear system could not be factored or an
        iterate stopped being finite.
    """
    if tol <= 0:
        raise ValueError(f"Solver tolerance must be positive, got {tol!r}.")

    if problem.m == 0:
        solution = _solve_unconstrained(problem, tol)

    else:
        solution = _solve_constrained(problem, tol, max_iter)

    LOGGER.debug(
        "Quadratic program solved",
        n=problem.n,
        m=problem.m,
        status=solution.status.value,
        iterations=solution.iterations,
        kkt_residual=solution.kkt_residual,
    )

    return solution


def _solve_unconstrained(problem: QpProblem, tol: float) -> QpSolution:
    duals = np.zeros(0)
    factor = _factorize(problem.P)

    if factor is None:
        return _failure(np.zeros(problem.n), duals, problem, iterations=0)

    z = scipy.linalg.cho_solve(factor, -problem.q)
    residual = problem.kkt_residual(z, duals)
    status = (
        SolverStatus.CONVERGED if residual <= tol else SolverStatus.MAX_ITERATIONS
    )

    return QpSolution(
        z=z,
        duals=duals,
        objective=problem.objective(z),
        kkt_residual=residual,
        status=status,
        iterations=1,
    )


def _solve_constrained(problem: QpProblem, tol: float, max_iter: int) -> QpSolution:
    P, q, G, h = problem.P, problem.q, problem.G, problem.h
    m = problem.m
    z, s, duals = _starting_point(problem)

    for iteration in range(max_iter + 1):
        residual = problem.kkt_residual(z, duals)

        if residual <= tol:
            return QpSolution(
                z=z,
                duals=duals,
                objective=problem.objective(z),
                kkt_residual=residual,
                status=SolverStatus.CONVERGED,
                iterations=iteration,
            )

        if iteration == max_iter:
            break

        r_dual = P @ z + q + G.T @ duals
        r_primal = G @ z + s - h
        mu = float(s @ duals) / m

        factor = _factorize(P + (G.T * (duals / s)) @ G)

        if factor is None:
            return _failure(z, duals, problem, iterations=iteration)

        # predictor
        r_comp = s * duals
        direction = _newton_direction(factor, G, s, duals, r_dual, r_primal, r_comp)

        if direction is None:
            return _failure(z, duals, problem, iterations=iteration)

        dz, ds, dd = direction
        alpha_aff = min(1.0, _max_step(s, ds), _max_step(duals, dd))
        mu_aff = float((s + alpha_aff * ds) @ (duals + alpha_aff * dd)) / m
        centering = (mu_aff / mu) ** 3 if mu > 0 else 0.0

        # corrector
        r_comp = s * duals + ds * dd - centering * mu
        direction = _newton_direction(factor, G, s, duals, r_dual, r_primal, r_comp)

        if direction is None:
            return _failure(z, duals, problem, iterations=iteration)

        dz, ds, dd = direction
        alpha = min(
            1.0,
            STEP_FRACTION * _max_step(s, ds),
            STEP_FRACTION * _max_step(duals, dd),
        )

        z = z + alpha * dz
        s = s + alpha * ds
        duals = duals + alpha * dd

        if not _all_finite(z, s, duals):
            return _failure(z, duals, problem, iterations=iteration + 1)

    LOGGER.warning(
        "Interior-point iteration budget exhausted",
        max_iter=max_iter,
        kkt_residual=problem.kkt_residual(z, duals),
    )

    return QpSolution(
        z=z,
        duals=duals,
        objective=problem.objective(z),
        kkt_residual=problem.kkt_residual(z, duals),
        status=SolverStatus.MAX_ITERATIONS,
        iterations=max_iter,
    )


def _starting_point(problem: QpProblem) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    P, q, G, h = problem.P, problem.q, problem.G, problem.h
    factor = _factorize(P + G.T @ G)
    z = (
        scipy.linalg.cho_solve(factor, G.T @ h - q)
        if factor is not None
        else np.zeros(problem.n)
    )
    s = np.maximum(np.abs(h - G @ z), 1.0)
    duals = np.ones(problem.m)

    return z, s, duals


def _newton_direction(
    factor: _CholeskyFactor,
    G: np.ndarray,
    s: np.ndarray,
    duals: np.ndarray,
    r_dual: np.ndarray,
    r_primal: np.ndarray,
    r_comp: np.ndarray,
) -> Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """The Newton step, or ``None`` when the system has no finite solution."""
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        rhs = -r_dual + G.T @ ((r_comp - duals * r_primal) / s)

    if not _all_finite(rhs):
        return None

    try:
        dz = scipy.linalg.cho_solve(factor, rhs)

    except (np.linalg.LinAlgError, ValueError):
        return None

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ds = -r_primal - G @ dz
        dd = (-r_comp - duals * ds) / s

    if not _all_finite(dz, ds, dd):
        return None

    return dz, ds, dd


def _factorize(matrix: np.ndarray) -> Optional[_CholeskyFactor]:
    try:
        return scipy.linalg.cho_factor(matrix, lower=True)

    except (np.linalg.LinAlgError, ValueError):
        pass

    scale = max(1.0, float(np.abs(np.diag(matrix)).max(initial=0.0)))
    identity = np.eye(matrix.shape[0])
    regularization = REGULARIZATION_BASE

    for escalation in range(REGULARIZATION_ESCALATIONS + 1):
        try:
            return scipy.linalg.cho_factor(
                matrix + regularization * scale * identity, lower=True
            )

        except (np.linalg.LinAlgError, ValueError):
            LOGGER.debug(
                "Cholesky factorization failed, escalating regularization",
                escalation=escalation,
                regularization=regularization * scale,
            )
            regularization *= REGULARIZATION_GROWTH

    return None


def _max_step(x: np.ndarray, dx: np.ndarray) -> float:
    decreasing = dx < 0

    if not np.any(decreasing):
        return np.inf

    return float(np.min(-x[decreasing] / dx[decreasing]))


def _all_finite(*arrays: np.ndarray) -> bool:
    return all(bool(np.all(np.isfinite(a))) for a in arrays)


def _failure(
    z: np.ndarray, duals: np.ndarray, problem: QpProblem, iterations: int
) -> QpSolution:
    LOGGER.warning(
        "Interior-point iteration stopped on a singular system or non-finite iterate",
        iterations=iterations,
    )
    finite = _all_finite(z, duals)

    return QpSolution(
        z=z,
        duals=np.maximum(duals, 0.0) if finite else duals,
        objective=problem.objective(z) if finite else float("nan"),
        kkt_residual=problem.kkt_residual(z, duals) if finite else float("inf"),
        status=SolverStatus.NUMERICAL_FAILURE,
        iterations=iterations,
    )
