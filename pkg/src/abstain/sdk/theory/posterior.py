from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from abstain.sdk.exceptions import InvalidPosteriorError
from abstain.sdk.utilities.random import RNGenerator

SUM_TOLERANCE = 1e-12


class Regime(enum.IntEnum):
    """The pointwise-optimal action under the 0-1-c-d loss."""

    ACCEPT_POSITIVE = 1
    REJECT = 0
    ACCEPT_NEGATIVE = -1


@dataclass(frozen=True)
class ClassPosterior:
    """Class probabilities ``(pi_+, pi_0, pi_-)`` at one input point."""

    pi_plus: float
    pi_zero: float
    pi_minus: float

    def __post_init__(self) -> None:
        values = (self.pi_plus, self.pi_zero, self.pi_minus)

        if any(not 0.0 <= p <= 1.0 for p in values):
            raise InvalidPosteriorError(
                f"Posterior probabilities must lie in [0, 1], got {values!r}."
            )

        if abs(sum(values) - 1.0) > SUM_TOLERANCE:
            raise InvalidPosteriorError(
                f"Posterior probabilities must sum to 1, got {sum(values)!r}."
            )

    @classmethod
    def from_positive_negative(
        cls, pi_plus: float, pi_minus: float
    ) -> "ClassPosterior":
        return cls(
            pi_plus=pi_plus,
            pi_zero=max(0.0, 1.0 - pi_plus - pi_minus),
            pi_minus=pi_minus,
        )

    def as_tuple(self) -> Tuple[float, float, float]:
        return self.pi_plus, self.pi_zero, self.pi_minus

    def swapped(self) -> "ClassPosterior":
        return ClassPosterior(
            pi_plus=self.pi_minus, pi_zero=self.pi_zero, pi_minus=self.pi_plus
        )

    def __str__(self) -> str:
        return f"({self.pi_plus:.6g}, {self.pi_zero:.6g}, {self.pi_minus:.6g})"


def simplex_grid(step: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Every posterior whose positive and negative masses are multiples of ``step``.

    Returns:
        The ``(pi_+, pi_0, pi_-)`` arrays of the sweep.
    """
    if not 0.0 < step <= 1.0:
        raise ValueError(f"The simplex step must lie in (0, 1], got {step!r}.")

    n_steps = int(round(1.0 / step))
    i, j = np.meshgrid(np.arange(n_steps + 1), np.arange(n_steps + 1), indexing="ij")
    keep = i + j <= n_steps
    pi_plus = i[keep] / n_steps
    pi_minus = j[keep] / n_steps
    pi_zero = np.maximum(1.0 - pi_plus - pi_minus, 0.0)

    return pi_plus, pi_zero, pi_minus


def random_posteriors(rng: RNGenerator, size: int) -> List[ClassPosterior]:
    draws = rng.dirichlet(np.ones(3), size=size)

    return [
        ClassPosterior.from_positive_negative(float(row[0]), float(row[2]))
        for row in draws
    ]
