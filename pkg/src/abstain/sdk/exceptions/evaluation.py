from .base import BaseEvaluationError


class CrossValidationError(BaseEvaluationError):
    """Cross-validation could not score any grid point."""


class InsufficientRunsError(BaseEvaluationError):
    """Too few experiment runs were requested for significance testing."""
