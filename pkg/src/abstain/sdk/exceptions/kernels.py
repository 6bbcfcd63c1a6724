from .base import BaseKernelError


class KernelDimensionError(BaseKernelError):
    """Points and basis centers do not share a dimensionality."""


class InvalidKernelWidthError(BaseKernelError):
    """A Gaussian width that is not strictly positive was supplied."""
