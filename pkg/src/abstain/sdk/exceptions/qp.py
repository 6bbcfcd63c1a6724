from .base import BaseQpError


class QpDimensionError(BaseQpError):
    """The quadratic program's matrices and vectors have inconsistent shapes."""


class QpNotConvexError(BaseQpError):
    """The quadratic term of the program is not positive semidefinite."""
