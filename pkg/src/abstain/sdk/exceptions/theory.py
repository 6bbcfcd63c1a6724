from .base import BaseTheoryError


class TheoryCheckFailedError(BaseTheoryError):
    """One or more theory oracle checks found a counterexample."""


class InvalidPosteriorError(BaseTheoryError):
    """The class probabilities are outside [0, 1] or do not sum to one."""
