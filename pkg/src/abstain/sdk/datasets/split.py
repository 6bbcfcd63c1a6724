from __future__ import annotations

from typing import List, Tuple

import numpy as np
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import InvalidDatasetError
from abstain.sdk.utilities.random import init_rng

from .dataset import Dataset

LOGGER: BoundLogger = structlog.stdlib.get_logger()

DEFAULT_SPLIT_RATIO = 1.0 / 3.0


def split(
    data: Dataset, ratio: float = DEFAULT_SPLIT_RATIO, seed: int = 0
) -> Tuple[Dataset, Dataset]:
    """Draws a stratified train/test split.

    Each label class contributes ``floor(ratio * n_k + 0.5)`` samples to the training
    part and the rest to the test part. A class with fewer than two samples cannot be
    stratified and goes wholly to the training part. Ambiguous samples are kept in
    the test part; accuracy scoring ignores them.

    Args:
        data: The dataset to split.
        ratio: The training fraction, in ``(0, 1)``.
        seed: Seed of the permutation within each class.

    Returns:
        A ``(train, test)`` tuple. Both keep the original sample order.
    """
    if not 0.0 < ratio < 1.0:
        raise InvalidDatasetError(
            f"The training fraction must lie in (0, 1), got {ratio!r}."
        )

    _, rng = init_rng(seed)
    train_parts: List[np.ndarray] = []
    test_parts: List[np.ndarray] = []

    for label in (1, -1, 0):
        members = np.flatnonzero(data.labels == label)

        if members.size < 2:
            train_parts.append(members)
            continue

        shuffled = rng.permutation(members)
        n_train = int(np.floor(ratio * members.size + 0.5))
        n_train = min(max(n_train, 1), members.size - 1)
        train_parts.append(shuffled[:n_train])
        test_parts.append(shuffled[n_train:])

    train_index = np.sort(np.concatenate(train_parts))
    test_index = np.sort(np.concatenate(test_parts)) if test_parts else train_index[:0]

    LOGGER.debug(
        "Dataset split",
        dataset=data.name,
        ratio=ratio,
        seed=seed,
        train=int(train_index.size),
        test=int(test_index.size),
    )

    return (
        data.subset(train_index, name=f"{data.name}-train"),
        data.subset(test_index, name=f"{data.name}-test"),
    )
