from __future__ import annotations

import pytest

from abstain.sdk import exceptions
from abstain.sdk.exceptions import (
    BaseAbstainError,
    BaseDatasetError,
    BaseEvaluationError,
    BaseKernelError,
    BaseLossError,
    BaseModelError,
    BaseQpError,
    BaseTheoryError,
)


@pytest.mark.parametrize(
    ("error", "family"),
    [
        ("QpDimensionError", BaseQpError),
        ("QpNotConvexError", BaseQpError),
        ("InvalidLabelError", BaseLossError),
        ("InvalidLossParamsError", BaseLossError),
        ("KernelDimensionError", BaseKernelError),
        ("InvalidKernelWidthError", BaseKernelError),
        ("InvalidTrainingDataError", BaseModelError),
        ("NumericalFailureError", BaseModelError),
        ("UnknownMethodError", BaseModelError),
        ("ModelFileError", BaseModelError),
        ("DatasetParseError", BaseDatasetError),
        ("DatasetConstructionError", BaseDatasetError),
        ("InvalidDatasetError", BaseDatasetError),
        ("CrossValidationError", BaseEvaluationError),
        ("InsufficientRunsError", BaseEvaluationError),
        ("TheoryCheckFailedError", BaseTheoryError),
        ("InvalidPosteriorError", BaseTheoryError),
    ],
)
def test_error_families(error, family) -> None:
    error_type = getattr(exceptions, error)

    assert issubclass(error_type, family)
    assert issubclass(error_type, BaseAbstainError)

    with pytest.raises(family, match="boom"):
        raise error_type("boom")


def test_every_exported_error_is_a_library_error() -> None:
    for name in exceptions.__all__:
        assert issubclass(getattr(exceptions, name), BaseAbstainError)
