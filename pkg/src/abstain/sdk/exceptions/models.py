from .base import BaseModelError


class InvalidTrainingDataError(BaseModelError):
    """The training data does not satisfy the trainer's preconditions."""


class NumericalFailureError(BaseModelError):
    """The quadratic program solver could not recover from a singular system."""


class UnknownMethodError(BaseModelError):
    """The requested training method could not be located."""


class ModelFileError(BaseModelError):
    """A model file could not be read or does not describe a valid model."""
