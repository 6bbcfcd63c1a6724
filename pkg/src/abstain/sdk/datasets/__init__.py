from .dataset import ClassCounts, Dataset, LabeledSample
from .housing import (
    PD3_SEARCH_BUDGET,
    build_pd1,
    build_pd2,
    build_pd3,
    load_regression_csv,
)
from .io import read_dataset, write_dataset
from .projection import project_pca
from .split import DEFAULT_SPLIT_RATIO, split
from .toy import ToyConfig, expected_max_accuracy, generate_toy, in_mixed_region

__all__ = [
    "ClassCounts",
    "DEFAULT_SPLIT_RATIO",
    "Dataset",
    "LabeledSample",
    "PD3_SEARCH_BUDGET",
    "ToyConfig",
    "build_pd1",
    "build_pd2",
    "build_pd3",
    "expected_max_accuracy",
    "generate_toy",
    "in_mixed_region",
    "load_regression_csv",
    "project_pca",
    "read_dataset",
    "split",
    "write_dataset",
]
