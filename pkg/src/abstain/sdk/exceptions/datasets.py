from .base import BaseDatasetError


class DatasetParseError(BaseDatasetError):
    """A CSV file could not be parsed into a numeric table."""


class DatasetConstructionError(BaseDatasetError):
    """A derived dataset could not be constructed from its inputs."""


class InvalidDatasetError(BaseDatasetError):
    """The dataset's features and labels are malformed."""
