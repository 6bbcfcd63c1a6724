from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple, Union

import numpy as np
import structlog
from sklearn.model_selection import StratifiedKFold
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import Dataset
from abstain.sdk.exceptions import (
    BaseKernelError,
    BaseLossError,
    BaseModelError,
    BaseQpError,
    CrossValidationError,
)
from abstain.sdk.models import MethodSpec, binary_accuracy, get_method

from .grid import HyperGrid

LOGGER: BoundLogger = structlog.stdlib.get_logger()

DEFAULT_FOLDS = 5

TRAINING_ERRORS = (BaseKernelError, BaseLossError, BaseModelError, BaseQpError)


@dataclass(frozen=True)
class CrossValidationResult:
    """The chosen grid point and the mean validation accuracy of every point.

    Attributes:
        hyperparameters: The chosen grid point.
        score: Its mean validation accuracy, ``nan`` when the grid has one point
            and no folds were trained.
        scores: The mean validation accuracy of each grid point in grid order,
            ``nan`` for points whose training failed on some fold.
    """

    hyperparameters: Dict[str, float]
    score: float
    scores: List[float] = field(default_factory=list)


def cross_validate(
    method: Union[str, MethodSpec],
    train: Dataset,
    grid: Optional[HyperGrid] = None,
    folds: int = DEFAULT_FOLDS,
    seed: int = 0,
    fixed: Optional[Mapping[str, float]] = None,
) -> CrossValidationResult:
    """Chooses hyperparameters by stratified k-fold cross-validation.

    Folds are stratified over the ternary labels and shared by every grid point.
    Validation accuracy reads the positive and negative validation samples only,
    and a fold without any is skipped. The grid point with the highest mean fold
    accuracy wins, the first in grid order on ties.

    Args:
        method: A method tag or registered method.
        train: The training data.
        grid: The candidate values. Defaults to the reference grids.
        folds: The number of folds.
        seed: Seed of the fold assignment and of randomized trainers.
        fixed: Entries copied into every grid point, such as surrogate overrides.

    Raises:
        CrossValidationError: If the data has fewer positive and negative samples
            than folds, if every fold was skipped, or if training failed at every
            grid point.
    """
    spec = get_method(method) if isinstance(method, str) else method
    grid = grid if grid is not None else HyperGrid()
    points = grid.points(spec.axes, fixed=fixed)

    if int(train.binary_mask.sum()) < folds:
        raise CrossValidationError(
            f"{folds}-fold cross-validation needs at least {folds} positive and "
            f"negative samples, got {int(train.binary_mask.sum())} in "
            f"{train.name!r}."
        )

    if len(points) == 1:
        return CrossValidationResult(
            hyperparameters=points[0], score=float("nan"), scores=[float("nan")]
        )

    splits = _fold_splits(train, folds, seed)
    scores = [_score_point(spec, train, splits, point, seed) for point in points]

    if np.all(np.isnan(scores)):
        raise CrossValidationError(
            f"Training {spec.tag} failed at every grid point on {train.name!r}."
        )

    best = int(np.nanargmax(scores))
    LOGGER.debug(
        "Cross-validation finished",
        method=spec.tag,
        grid_size=len(points),
        best=points[best],
        score=scores[best],
    )

    return CrossValidationResult(
        hyperparameters=points[best], score=float(scores[best]), scores=scores
    )


def _fold_splits(
    train: Dataset, folds: int, seed: int
) -> List[Tuple[Dataset, Dataset]]:
    splitter = StratifiedKFold(n_splits=folds, shuffle=True, random_state=seed)
    splits: List[Tuple[Dataset, Dataset]] = []

    try:
        for fit_index, validation_index in splitter.split(train.features, train.labels):
            validation = train.subset(validation_index)

            if not np.any(validation.binary_mask):
                LOGGER.debug("Fold without labeled validation samples skipped")
                continue

            splits.append((train.subset(fit_index), validation))

    except ValueError as err:
        raise CrossValidationError(
            f"Cannot split {train.name!r} into {folds} stratified folds: {err}"
        ) from err

    if not splits:
        raise CrossValidationError(
            f"Every fold of {train.name!r} lacks positive and negative validation "
            "samples."
        )

    return splits


def _score_point(
    spec: MethodSpec,
    train: Dataset,
    splits: List[Tuple[Dataset, Dataset]],
    point: Mapping[str, float],
    seed: int,
) -> float:
    accuracies: List[float] = []

    for fit, validation in splits:
        try:
            model = spec.train(fit, point, seed=seed)

        except TRAINING_ERRORS as err:
            LOGGER.debug(
                "Grid point failed", method=spec.tag, point=dict(point), error=str(err)
            )
            return float("nan")

        accuracies.append(binary_accuracy(model, validation))

    return float(np.mean(accuracies))
