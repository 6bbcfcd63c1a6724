from .base import (
    BaseAbstainError,
    BaseDatasetError,
    BaseEvaluationError,
    BaseKernelError,
    BaseLossError,
    BaseModelError,
    BaseQpError,
    BaseTheoryError,
)
from .datasets import (
    DatasetConstructionError,
    DatasetParseError,
    InvalidDatasetError,
)
from .evaluation import CrossValidationError, InsufficientRunsError
from .kernels import InvalidKernelWidthError, KernelDimensionError
from .losses import InvalidLabelError, InvalidLossParamsError
from .models import (
    InvalidTrainingDataError,
    ModelFileError,
    NumericalFailureError,
    UnknownMethodError,
)
from .qp import QpDimensionError, QpNotConvexError
from .theory import InvalidPosteriorError, TheoryCheckFailedError

__all__ = [
    "BaseAbstainError",
    "BaseDatasetError",
    "BaseEvaluationError",
    "BaseKernelError",
    "BaseLossError",
    "BaseModelError",
    "BaseQpError",
    "BaseTheoryError",
    "CrossValidationError",
    "DatasetConstructionError",
    "DatasetParseError",
    "InsufficientRunsError",
    "InvalidDatasetError",
    "InvalidKernelWidthError",
    "InvalidLabelError",
    "InvalidLossParamsError",
    "InvalidPosteriorError",
    "InvalidTrainingDataError",
    "KernelDimensionError",
    "ModelFileError",
    "NumericalFailureError",
    "QpDimensionError",
    "QpNotConvexError",
    "TheoryCheckFailedError",
    "UnknownMethodError",
]
