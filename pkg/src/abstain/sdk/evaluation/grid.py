from __future__ import annotations

import itertools
from dataclasses import dataclass, fields, replace
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from abstain.sdk.exceptions import CrossValidationError

REGULARIZATION_GRID: Tuple[float, ...] = (1e-3, 1e-5, 1e-7)
WIDTH_GRID: Tuple[float, ...] = (10**0.5, 10**0.75, 10.0)
LAPLACIAN_GRID: Tuple[float, ...] = (1e-1, 1e-2, 1e-3)
COST_GRID: Tuple[float, ...] = (0.03, 0.06, 0.20, 0.45)
AMBIGUITY_GRID: Tuple[float, ...] = (0.03, 0.06, 0.20, 0.50)

_AXIS_FIELDS: Dict[str, str] = {
    "lam": "lam_values",
    "lam_prime": "lam_prime_values",
    "sigma": "sigma_values",
    "sigma_prime": "sigma_prime_values",
    "tau": "tau_values",
    "c": "c_values",
    "d": "d_values",
}


@dataclass(frozen=True)
class HyperGrid:
    """Candidate values of every hyperparameter searched by cross-validation.

    The defaults are the grids of the reference experiments.
    """

    lam_values: Tuple[float, ...] = REGULARIZATION_GRID
    lam_prime_values: Tuple[float, ...] = REGULARIZATION_GRID
    sigma_values: Tuple[float, ...] = WIDTH_GRID
    sigma_prime_values: Tuple[float, ...] = WIDTH_GRID
    tau_values: Tuple[float, ...] = LAPLACIAN_GRID
    c_values: Tuple[float, ...] = COST_GRID
    d_values: Tuple[float, ...] = AMBIGUITY_GRID

    def __post_init__(self) -> None:
        for field in fields(self):
            values = tuple(float(v) for v in getattr(self, field.name))

            if not values:
                raise CrossValidationError(
                    f"The hyperparameter grid {field.name!r} must not be empty."
                )

            object.__setattr__(self, field.name, values)

    def values(self, axis: str) -> Tuple[float, ...]:
        try:
            return getattr(self, _AXIS_FIELDS[axis])

        except KeyError as err:
            raise CrossValidationError(
                f"Unknown hyperparameter axis {axis!r}. Valid axes are "
                f"{', '.join(_AXIS_FIELDS)}."
            ) from err

    def points(
        self, axes: Sequence[str], fixed: Optional[Mapping[str, float]] = None
    ) -> List[Dict[str, float]]:
        """Enumerates the grid over ``axes`` in row-major order.

        Args:
            axes: The hyperparameters to vary, outermost first.
            fixed: Extra entries copied into every point.
        """
        extra = dict(fixed or {})
        grids = [self.values(axis) for axis in axes]

        return [
            {**extra, **dict(zip(axes, combination))}
            for combination in itertools.product(*grids)
        ]

    def size(self, axes: Sequence[str]) -> int:
        total = 1

        for axis in axes:
            total *= len(self.values(axis))

        return total

    def with_overrides(self, **overrides: Optional[Sequence[float]]) -> "HyperGrid":
        """Replaces the named axes, ignoring ``None`` values."""
        changes = {
            _AXIS_FIELDS.get(axis, axis): tuple(values)
            for axis, values in overrides.items()
            if values is not None
        }

        unknown = set(changes) - set(_AXIS_FIELDS.values())

        if unknown:
            raise CrossValidationError(
                f"Unknown hyperparameter axes {sorted(unknown)!r}."
            )

        return replace(self, **changes)
