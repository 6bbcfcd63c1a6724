"""Base classes for exceptions in the abstain package"""


class BaseAbstainError(Exception):
    """Base class for all abstain exceptions."""


class BaseQpError(BaseAbstainError):
    """Base class for all quadratic program construction exceptions."""


class BaseLossError(BaseAbstainError):
    """Base class for all loss function exceptions."""


class BaseKernelError(BaseAbstainError):
    """Base class for all basis expansion and graph Laplacian exceptions."""


class BaseModelError(BaseAbstainError):
    """Base class for all trainer and model file exceptions."""


class BaseDatasetError(BaseAbstainError):
    """Base class for all dataset construction and ingestion exceptions."""


class BaseEvaluationError(BaseAbstainError):
    """Base class for all cross-validation and experiment exceptions."""


class BaseTheoryError(BaseAbstainError):
    """Base class for all theory oracle exceptions."""
