from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

from abstain.sdk.exceptions import InvalidLossParamsError


class TernaryLabel(enum.IntEnum):
    """Sample labels; ambiguous samples carry zero so that ``y**2`` gates them out."""

    NEGATIVE = -1
    AMBIGUOUS = 0
    POSITIVE = 1


@dataclass(frozen=True)
class LossParams:
    """Penalties of the 0-1-c-d loss and the shape of its convex surrogates.

    Attributes:
        c: Cost of rejecting a positive or negative sample, in ``(0, 0.5)``.
        d: Cost of accepting an ambiguous sample, in ``(0, 1]``. Values above 0.5
            make rejecting an ambiguous sample preferable at every point.
        alpha: Slope of the margin branch of the surrogate.
        beta: Slope of the rejection branches of the surrogate.
        eta: Scale applied to the rejection branches, at least 1.
    """

    c: float
    d: float
    alpha: float
    beta: float
    eta: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 < self.c < 0.5:
            raise InvalidLossParamsError(
                f"The rejection cost c must lie in (0, 0.5), got {self.c!r}."
            )

        if not 0.0 < self.d <= 1.0:
            raise InvalidLossParamsError(
                f"The ambiguity penalty d must lie in (0, 1], got {self.d!r}."
            )

        if self.alpha <= 0.0 or self.beta <= 0.0:
            raise InvalidLossParamsError(
                f"The surrogate slopes must be positive, got alpha={self.alpha!r}, "
                f"beta={self.beta!r}."
            )

        if self.eta < 1.0:
            raise InvalidLossParamsError(
                f"The surrogate scale eta must be at least 1, got {self.eta!r}."
            )

    def with_overrides(
        self,
        alpha: Optional[float] = None,
        beta: Optional[float] = None,
        eta: Optional[float] = None,
    ) -> "LossParams":
        changes = {
            key: value
            for key, value in (("alpha", alpha), ("beta", beta), ("eta", eta))
            if value is not None
        }

        return replace(self, **changes)


def calibrated_params(c: float, d: float) -> LossParams:
    """Returns the surrogate shape that makes the MHA loss calibrated for ``(c, d)``.

    The map is ``alpha = 2(1 - 2c)``, ``beta = 1 + 2c`` and ``eta = 2 / (1 + 2c)``;
    it does not depend on ``d``.

    Example:
        >>> calibrated_params(0.2, 0.2)
        LossParams(c=0.2, d=0.2, alpha=1.2, beta=1.4, eta=1.4285714285714286)
    """
    if not 0.0 < c < 0.5:
        raise InvalidLossParamsError(
            f"The rejection cost c must lie in (0, 0.5), got {c!r}."
        )

    return LossParams(
        c=c,
        d=d,
        alpha=2.0 * (1.0 - 2.0 * c),
        beta=1.0 + 2.0 * c,
        eta=2.0 / (1.0 + 2.0 * c),
    )
