"""Ternary-label datasets derived from a regression table of district house prices.

The thresholds read the target (the average house price) with strict inequalities,
so a target exactly on a threshold falls into the ambiguous band.
"""
from __future__ import annotations

from pathlib import Path
from typing import Tuple, Union

import numpy as np
import pandas as pd
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import DatasetConstructionError, DatasetParseError
from abstain.sdk.utilities.random import init_rng

from .dataset import Dataset

LOGGER: BoundLogger = structlog.stdlib.get_logger()

PD_POSITIVE_THRESHOLD = 23.0
PD_NEGATIVE_THRESHOLD = 19.0
PD3_SEPARABLE_THRESHOLD = 21.0
PD3_REFERENCE_SIZE = 506
PD3_REFERENCE_SEPARABLE = 170
PD3_SIZE_TOLERANCE = 15
PD3_MEAN_TOLERANCE = 1.0
PD3_SEARCH_BUDGET = 10_000

_TERNARY = np.array([1, 0, -1])


def load_regression_csv(path: Union[str, Path]) -> Tuple[np.ndarray, np.ndarray]:
    """Reads a comma-separated numeric table whose last column is the target.

    A header row is detected by a first row containing a non-numeric cell.

    Args:
        path: The CSV file.

    Returns:
        A ``(features, targets)`` tuple.

    Raises:
        DatasetParseError: If the file is missing, empty, ragged, has fewer than two
            columns, or contains a missing or non-numeric cell. The message names
            the offending line and column.
    """
    path = Path(path)

    if not path.is_file():
        raise DatasetParseError(f"Regression table {str(path)!r} does not exist.")

    try:
        raw = pd.read_csv(path, header=None, dtype=str, keep_default_na=False)

    except pd.errors.EmptyDataError as err:
        raise DatasetParseError(f"Regression table {str(path)!r} is empty.") from err

    except pd.errors.ParserError as err:
        raise DatasetParseError(
            f"Regression table {str(path)!r} has inconsistent row lengths: {err}"
        ) from err

    first_line = 1

    if len(raw) and _is_header(raw.iloc[0]):
        raw = raw.iloc[1:]
        first_line = 2

    if raw.empty:
        raise DatasetParseError(f"Regression table {str(path)!r} has no data rows.")

    if raw.shape[1] < 2:
        raise DatasetParseError(
            f"Regression table {str(path)!r} needs at least one feature column and "
            "a target column."
        )

    values = raw.apply(
        lambda column: pd.to_numeric(column.str.strip(), errors="coerce")
    )
    bad_cells = np.argwhere(values.isna().to_numpy())

    if bad_cells.size:
        row, column = (int(x) for x in bad_cells[0])
        raise DatasetParseError(
            f"Regression table {str(path)!r} has a missing or non-numeric cell "
            f"{raw.iat[row, column]!r} at line {row + first_line}, column "
            f"{column + 1}."
        )

    table = values.to_numpy(dtype=float)
    LOGGER.debug(
        "Regression table loaded",
        path=str(path),
        rows=table.shape[0],
        cols=table.shape[1],
    )

    return table[:, :-1], table[:, -1]


def build_pd1(features: np.ndarray, targets: np.ndarray) -> Dataset:
    """Positive above 23, negative below 19, ambiguous in between."""
    features, targets = _check_table(features, targets)

    return Dataset(features=features, labels=_banded_labels(targets), name="pd1")


def build_pd2(features: np.ndarray, targets: np.ndarray, seed: int = 0) -> Dataset:
    """As PD1, but the middle band is labeled uniformly over ``{+1, 0, -1}``."""
    features, targets = _check_table(features, targets)
    _, rng = init_rng(seed)

    labels = _banded_labels(targets)
    middle = labels == 0
    labels[middle] = rng.choice(_TERNARY, size=int(middle.sum()))

    return Dataset(features=features, labels=labels, name="pd2")


def build_pd3(
    features: np.ndarray,
    targets: np.ndarray,
    seed: int = 0,
    size_tolerance: int = PD3_SIZE_TOLERANCE,
    mean_tolerance: float = PD3_MEAN_TOLERANCE,
    budget: int = PD3_SEARCH_BUDGET,
) -> Dataset:
    """Splits the samples by a random hyperplane into a mixed and a separable part.

    Random unit directions ``v`` are drawn through the mean-centered features. A draw
    (tried in both orientations) is accepted when the separable part ``{v.x < 0}``
    has a size within ``size_tolerance`` of 170/506 of the samples and the average
    target of the two parts differs by at most ``mean_tolerance``. The mixed part is
    labeled uniformly over ``{+1, 0, -1}``; the separable part is positive above 21
    and negative otherwise.

    Raises:
        DatasetConstructionError: If no direction is accepted within ``budget``
            draws.
    """
    features, targets = _check_table(features, targets)
    _, rng = init_rng(seed)

    n_samples = features.shape[0]
    scale = n_samples / PD3_REFERENCE_SIZE
    target_separable = int(round(PD3_REFERENCE_SEPARABLE * scale))
    tolerance = max(1, int(round(size_tolerance * scale)))
    centered = features - features.mean(axis=0)

    for draw in range(budget):
        v = rng.standard_normal(features.shape[1])
        v /= np.linalg.norm(v)
        projection = centered @ v

        for orientation in (1.0, -1.0):
            mixed = orientation * projection >= 0
            n_separable = int(n_samples - mixed.sum())

            if n_separable in (0, n_samples):
                continue

            if abs(n_separable - target_separable) > tolerance:
                continue

            gap = abs(targets[mixed].mean() - targets[~mixed].mean())

            if gap > mean_tolerance:
                continue

            labels = np.where(targets > PD3_SEPARABLE_THRESHOLD, 1, -1)
            labels[mixed] = rng.choice(_TERNARY, size=int(mixed.sum()))
            LOGGER.info(
                "PD3 hyperplane accepted",
                draw=draw,
                separable=n_separable,
                mixed=int(mixed.sum()),
                mean_gap=float(gap),
            )

            return Dataset(features=features, labels=labels, name="pd3")

    raise DatasetConstructionError(
        f"No hyperplane met the PD3 size (+/-{tolerance} of {target_separable}) and "
        f"mean-matching (<= {mean_tolerance}) tolerances within {budget} draws."
    )


def _banded_labels(targets: np.ndarray) -> np.ndarray:
    labels = np.zeros(targets.shape[0], dtype=np.int64)
    labels[targets > PD_POSITIVE_THRESHOLD] = 1
    labels[targets < PD_NEGATIVE_THRESHOLD] = -1

    return labels


def _check_table(
    features: np.ndarray, targets: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    features = np.atleast_2d(np.asarray(features, dtype=float))
    targets = np.asarray(targets, dtype=float).reshape(-1)

    if features.shape[0] != targets.shape[0]:
        raise DatasetConstructionError(
            f"Got {features.shape[0]} feature rows but {targets.shape[0]} targets."
        )

    return features, targets


def _is_header(row: pd.Series) -> bool:
    return bool(pd.to_numeric(row.str.strip(), errors="coerce").isna().any())
