"""Kernel machines that classify and reject using ambiguous training samples."""

from .__version__ import __version__

__all__ = ["__version__"]
