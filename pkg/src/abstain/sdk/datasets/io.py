"""CSV persistence of ternary-label datasets.

Files hold the feature columns followed by an integer ``label`` column. Floats are
written with 17 significant digits and parsed with round-trip precision, so a
written dataset reads back bit-identical.
"""
from __future__ import annotations

from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import DatasetParseError, InvalidDatasetError

from .dataset import Dataset

LOGGER: BoundLogger = structlog.stdlib.get_logger()

FLOAT_FORMAT = "%.17g"
LABEL_COLUMN = "label"


def write_dataset(dataset: Dataset, path: Union[str, Path]) -> Path:
    path = Path(path)
    columns = [f"x{i + 1}" for i in range(dataset.feature_dim)]
    frame = pd.DataFrame(dataset.features, columns=columns)
    frame[LABEL_COLUMN] = dataset.labels

    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)

    except OSError as err:
        raise DatasetParseError(
            f"Cannot write dataset to {str(path)!r}: {err}"
        ) from err

    LOGGER.debug("Dataset written", path=str(path), rows=len(dataset))

    return path


def read_dataset(path: Union[str, Path], name: str = "") -> Dataset:
    """Reads a dataset file, with or without a header row.

    Raises:
        DatasetParseError: If the file is missing, empty or not numeric, or the
            labels are not integers in ``{+1, 0, -1}``.
    """
    path = Path(path)

    if not path.is_file():
        raise DatasetParseError(f"Dataset file {str(path)!r} does not exist.")

    try:
        first_line = path.read_text().splitlines()[0] if path.stat().st_size else ""

    except (OSError, UnicodeDecodeError) as err:
        raise DatasetParseError(f"Cannot read dataset {str(path)!r}: {err}") from err

    has_header = bool(first_line) and not _is_numeric_row(first_line)

    try:
        frame = pd.read_csv(
            path,
            header=0 if has_header else None,
            float_precision="round_trip",
        )

    except pd.errors.EmptyDataError as err:
        raise DatasetParseError(f"Dataset file {str(path)!r} is empty.") from err

    except (pd.errors.ParserError, ValueError) as err:
        raise DatasetParseError(f"Cannot parse dataset {str(path)!r}: {err}") from err

    if frame.shape[1] < 2 or frame.empty:
        raise DatasetParseError(
            f"Dataset file {str(path)!r} needs feature columns, a label column and "
            "at least one row."
        )

    table = frame.apply(pd.to_numeric, errors="coerce")
    bad_cells = np.argwhere(table.isna().to_numpy())

    if bad_cells.size:
        row, column = (int(x) for x in bad_cells[0])
        raise DatasetParseError(
            f"Dataset file {str(path)!r} has a missing or non-numeric cell at row "
            f"{row + 1 + int(has_header)}, column {column + 1}."
        )

    features = table.iloc[:, :-1].to_numpy(dtype=float)
    raw_labels = table.iloc[:, -1].to_numpy(dtype=float)

    if not np.all(np.isin(raw_labels, (-1.0, 0.0, 1.0))):
        raise DatasetParseError(
            f"Dataset file {str(path)!r} has labels outside {{+1, 0, -1}}."
        )

    try:
        dataset = Dataset(
            features=features,
            labels=raw_labels.astype(np.int64),
            name=name or path.stem,
        )

    except InvalidDatasetError as err:
        raise DatasetParseError(f"Dataset file {str(path)!r}: {err}") from err

    LOGGER.debug("Dataset read", path=str(path), counts=str(dataset.counts()))

    return dataset


def _is_numeric_row(line: str) -> bool:
    try:
        [float(cell) for cell in line.split(",")]

    except ValueError:
        return False

    return True
