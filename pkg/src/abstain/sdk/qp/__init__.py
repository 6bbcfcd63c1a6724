from .assembly import ConstraintRow, assemble_training_qp
from .problem import QpProblem, QpSolution, SolverStatus
from .solver import DEFAULT_MAX_ITER, DEFAULT_TOL, solve_qp

__all__ = [
    "ConstraintRow",
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "QpProblem",
    "QpSolution",
    "SolverStatus",
    "assemble_training_qp",
    "solve_qp",
]
