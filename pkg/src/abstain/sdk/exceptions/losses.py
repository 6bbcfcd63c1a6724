from .base import BaseLossError


class InvalidLabelError(BaseLossError):
    """A label outside of the domain accepted by a loss function was supplied."""


class InvalidLossParamsError(BaseLossError):
    """The loss penalties or surrogate shape parameters are out of range."""
