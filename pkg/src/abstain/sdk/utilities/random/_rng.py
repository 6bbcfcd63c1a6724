"""Seeded random number generators shared by the generators, trainers and harness."""

from __future__ import annotations

from typing import List, Tuple

import numpy as np
import structlog
from numpy.random import Generator as RNGenerator
from structlog.stdlib import BoundLogger

LOGGER: BoundLogger = structlog.stdlib.get_logger()

_SEED_UPPER_BOUND = 2**31 - 1


def init_rng(seed: int = -1) -> Tuple[int, RNGenerator]:
    """Constructs a new random number generator.

    Args:
        seed: A seed to initialize the random number generator. If the value is less
            than zero, then the seed is generated by pulling fresh, unpredictable
            entropy from the OS. The default is `-1`.

    Returns:
        A tuple containing the seed and the initialized random number generator. If a
        `seed < 0` was passed as an argument, then the seed generated by the OS will be
        returned.

    See Also:
        - :py:func:`numpy.random.default_rng`
    """
    rng = np.random.default_rng(seed if seed >= 0 else None)

    if seed < 0:
        seed = rng.bit_generator._seed_seq.entropy  # type: ignore[attr-defined]
        LOGGER.debug("Drew seed from OS entropy", seed=seed)

    return int(seed), rng


def draw_random_integers(rng: RNGenerator, size: int) -> List[int]:
    """Draws child seeds, one per independent stream (experiment run, CV split).

    Args:
        rng: The parent random number generator.
        size: The number of seeds to draw.

    Returns:
        A list of non-negative integers usable as seeds for :py:func:`init_rng`.
    """
    return [int(x) for x in rng.integers(low=0, high=_SEED_UPPER_BOUND, size=size)]
