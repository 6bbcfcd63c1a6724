"""The two-dimensional toy layout with a separable lower half and a mixed upper half.

Samples are uniform on ``[0, 1]^2``. The lower-left quadrant holds negatives, the
lower-right quadrant positives, and the upper half is a mixed region where
positives and negatives are intermixed with ambiguous samples in proportion
``r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import InvalidDatasetError
from abstain.sdk.utilities.random import RNGenerator, init_rng

from .dataset import Dataset

LOGGER: BoundLogger = structlog.stdlib.get_logger()

DEFAULT_TOTAL = 400
MIXED_REGION_THRESHOLD = 0.5

_Box = Tuple[Tuple[float, float], Tuple[float, float]]

_LOWER_LEFT: _Box = ((0.0, 0.5), (0.0, 0.5))
_LOWER_RIGHT: _Box = ((0.5, 1.0), (0.0, 0.5))
_UPPER_HALF: _Box = ((0.0, 1.0), (0.5, 1.0))


@dataclass(frozen=True)
class ToyConfig:
    r: float
    total: int = DEFAULT_TOTAL
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.r <= 1.0:
            raise InvalidDatasetError(
                f"The ambiguity ratio r must lie in [0, 1], got {self.r!r}."
            )

        if self.total < 4:
            raise InvalidDatasetError(
                f"The toy dataset needs at least 4 samples, got {self.total!r}."
            )


def generate_toy(config: ToyConfig) -> Dataset:
    """Samples the toy layout.

    Half of ``config.total`` samples (rounded down) fill the separable lower half,
    split evenly between the negative and positive quadrants. The rest fill the
    mixed region: ``round(r * n_mixed)`` ambiguous samples and the remainder split
    between positives and negatives, differing by at most one. For the default 400
    samples this is 100 negatives, 100 positives, ``200 r`` ambiguous samples and
    ``200 (1 - r)`` mixed-region positives and negatives.

    The sample order is shuffled with the seeded generator, so the output is a pure
    function of the config.
    """
    _, rng = init_rng(config.seed)

    n_separable = config.total // 2
    n_negative_sep = n_separable // 2
    n_positive_sep = n_separable - n_negative_sep
    n_mixed = config.total - n_separable
    n_ambiguous = int(np.floor(config.r * n_mixed + 0.5))
    n_binary_mixed = n_mixed - n_ambiguous
    n_positive_mixed = (n_binary_mixed + 1) // 2
    n_negative_mixed = n_binary_mixed - n_positive_mixed

    blocks: List[Tuple[np.ndarray, np.ndarray]] = [
        _uniform_block(rng, _LOWER_LEFT, n_negative_sep, label=-1),
        _uniform_block(rng, _LOWER_RIGHT, n_positive_sep, label=1),
        _uniform_block(rng, _UPPER_HALF, n_positive_mixed, label=1),
        _uniform_block(rng, _UPPER_HALF, n_negative_mixed, label=-1),
        _uniform_block(rng, _UPPER_HALF, n_ambiguous, label=0),
    ]
    features = np.vstack([block[0] for block in blocks])
    labels = np.concatenate([block[1] for block in blocks])
    order = rng.permutation(features.shape[0])

    dataset = Dataset(
        features=features[order], labels=labels[order], name=f"toy-r{config.r:g}"
    )
    LOGGER.debug(
        "Toy dataset generated",
        r=config.r,
        total=config.total,
        seed=config.seed,
        counts=str(dataset.counts()),
    )

    return dataset


def expected_max_accuracy(r: float) -> float:
    """Best attainable positive/negative test accuracy on the toy layout.

    The separable half is classified perfectly while the mixed region's positives and
    negatives are coin flips, giving ``(1 + (1 - r) / 2) / (1 + (1 - r))``.
    """
    if not 0.0 <= r <= 1.0:
        raise InvalidDatasetError(
            f"The ambiguity ratio r must lie in [0, 1], got {r!r}."
        )

    return (1.0 + 0.5 * (1.0 - r)) / (1.0 + (1.0 - r))


def in_mixed_region(features: np.ndarray) -> np.ndarray:
    return np.asarray(features)[:, 1] >= MIXED_REGION_THRESHOLD


def _uniform_block(
    rng: RNGenerator, box: _Box, size: int, label: int
) -> Tuple[np.ndarray, np.ndarray]:
    (x_low, x_high), (y_low, y_high) = box
    points = np.column_stack(
        [
            rng.uniform(x_low, x_high, size=size),
            rng.uniform(y_low, y_high, size=size),
        ]
    )

    return points.reshape(size, 2), np.full(size, label, dtype=np.int64)
