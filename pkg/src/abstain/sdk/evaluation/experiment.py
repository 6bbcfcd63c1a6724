"""Repeated random-split experiments comparing methods on one dataset."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np
import structlog
from joblib import Parallel, delayed
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import DEFAULT_SPLIT_RATIO, Dataset, split
from abstain.sdk.exceptions import (
    BaseEvaluationError,
    InsufficientRunsError,
    InvalidDatasetError,
)
from abstain.sdk.models import binary_accuracy, get_method
from abstain.sdk.utilities.random import draw_random_integers, init_rng

from .cross_validation import DEFAULT_FOLDS, TRAINING_ERRORS, cross_validate
from .grid import HyperGrid
from .statistics import SIGNIFICANCE_LEVEL, welch_t_test

LOGGER: BoundLogger = structlog.stdlib.get_logger()

DEFAULT_RUNS = 50
MAX_FAILURE_FRACTION = 0.1


@dataclass(frozen=True)
class RunResult:
    index: int
    seed: int
    accuracies: Dict[str, float]
    hyperparameters: Dict[str, Dict[str, float]]


@dataclass(frozen=True)
class MethodSummary:
    """Aggregate test accuracy of one method.

    Attributes:
        method: The method tag.
        mean: Mean accuracy over successful runs, ``nan`` if none succeeded.
        sd: Sample standard deviation over successful runs.
        n: The number of successful runs.
        failed: The number of failed runs.
        valid: Whether at most 10% of the runs failed and at least two succeeded.
        best: Whether the method is in the best set.
    """

    method: str
    mean: float
    sd: float
    n: int
    failed: int
    valid: bool
    best: bool


@dataclass(frozen=True)
class ExperimentReport:
    """The outcome of :py:func:`run_experiment`.

    Attributes:
        dataset: The dataset name.
        runs: The number of runs.
        seed: The master seed.
        split_ratio: The training fraction of every split.
        summaries: One summary per method, in the requested order.
        significance: ``significance[a][b]`` is whether ``a`` and ``b`` differ at
            the 5% level.
        accuracies: The per-run accuracies of each method, ``nan`` for failures.
    """

    dataset: str
    runs: int
    seed: int
    split_ratio: float
    summaries: List[MethodSummary]
    significance: Dict[str, Dict[str, bool]] = field(default_factory=dict)
    accuracies: Dict[str, List[float]] = field(default_factory=dict)

    @property
    def best_set(self) -> List[str]:
        return [summary.method for summary in self.summaries if summary.best]

    def summary(self, method: str) -> MethodSummary:
        for candidate in self.summaries:
            if candidate.method == method:
                return candidate

        raise KeyError(method)


def run_experiment(
    dataset: Dataset,
    methods: Sequence[str],
    runs: int = DEFAULT_RUNS,
    split_ratio: float = DEFAULT_SPLIT_RATIO,
    grid: Optional[HyperGrid] = None,
    seed: int = 0,
    folds: int = DEFAULT_FOLDS,
    jobs: int = 1,
) -> ExperimentReport:
    """Compares methods over repeated stratified random splits.

    Every run draws a fresh split from its own seed, cross-validates each method on
    the training part, retrains it with the chosen hyperparameters and scores the
    positive and negative test samples. Runs are independent and may execute in
    parallel; results are merged in run order, so ``jobs`` never changes the report.

    Args:
        dataset: The dataset to split.
        methods: Method tags, in report order.
        runs: The number of runs, at least 2.
        split_ratio: The training fraction of every split.
        grid: The cross-validation grid. Defaults to the reference grids.
        seed: The master seed; run seeds are drawn from it.
        folds: The number of cross-validation folds.
        jobs: The number of worker processes, ``-1`` for all cores.

    Returns:
        The aggregated report.
    """
    if runs < 2:
        raise InsufficientRunsError(
            f"An experiment needs at least 2 runs for its t-tests, got {runs}."
        )

    if not methods:
        raise InsufficientRunsError("An experiment needs at least one method.")

    for method in methods:
        get_method(method)

    grid = grid if grid is not None else HyperGrid()
    _, rng = init_rng(seed)
    run_seeds = draw_random_integers(rng, runs)
    LOGGER.info(
        "Experiment started",
        dataset=dataset.name,
        methods=list(methods),
        runs=runs,
        seed=seed,
        jobs=jobs,
    )

    results: List[RunResult] = Parallel(n_jobs=jobs)(
        delayed(_run_once)(
            dataset, list(methods), split_ratio, grid, folds, index, run_seed
        )
        for index, run_seed in enumerate(run_seeds)
    )
    results = sorted(results, key=lambda result: result.index)
    accuracies = {
        method: [result.accuracies[method] for result in results] for method in methods
    }

    return build_report(
        accuracies,
        dataset=dataset.name,
        seed=seed,
        split_ratio=split_ratio,
    )


def build_report(
    accuracies: Mapping[str, Sequence[float]],
    dataset: str = "dataset",
    seed: int = 0,
    split_ratio: float = DEFAULT_SPLIT_RATIO,
    level: float = SIGNIFICANCE_LEVEL,
) -> ExperimentReport:
    """Aggregates per-run accuracies into summaries, t-tests and the best set.

    ``nan`` entries are failed runs. The best set holds the valid method with the
    highest mean and every valid method not significantly different from it.
    """
    methods = list(accuracies)
    runs = max((len(values) for values in accuracies.values()), default=0)
    clean = {
        method: np.asarray(values, dtype=float)[
            ~np.isnan(np.asarray(values, dtype=float))
        ]
        for method, values in accuracies.items()
    }

    significance: Dict[str, Dict[str, bool]] = {method: {} for method in methods}

    for i, first in enumerate(methods):
        significance[first][first] = False

        for second in methods[i + 1 :]:
            different = False

            if clean[first].size >= 2 and clean[second].size >= 2:
                different = welch_t_test(clean[first], clean[second], level).significant

            significance[first][second] = different
            significance[second][first] = different

    aggregates: Dict[str, Dict[str, float]] = {}

    for method in methods:
        values = clean[method]
        n_runs = len(accuracies[method])
        failed = n_runs - int(values.size)
        aggregates[method] = dict(
            mean=float(values.mean()) if values.size else float("nan"),
            sd=float(values.std(ddof=1)) if values.size >= 2 else float("nan"),
            n=int(values.size),
            failed=failed,
            valid=bool(values.size >= 2 and failed <= MAX_FAILURE_FRACTION * n_runs),
        )

    valid_methods = [method for method in methods if aggregates[method]["valid"]]
    best_set: List[str] = []

    if valid_methods:
        top = max(valid_methods, key=lambda method: aggregates[method]["mean"])
        best_set = [
            method
            for method in valid_methods
            if method == top or not significance[top][method]
        ]

    else:
        LOGGER.warning("No method has enough successful runs for a best set")

    summaries = [
        MethodSummary(
            method=method,
            mean=aggregates[method]["mean"],
            sd=aggregates[method]["sd"],
            n=int(aggregates[method]["n"]),
            failed=int(aggregates[method]["failed"]),
            valid=bool(aggregates[method]["valid"]),
            best=method in best_set,
        )
        for method in methods
    ]

    return ExperimentReport(
        dataset=dataset,
        runs=runs,
        seed=seed,
        split_ratio=split_ratio,
        summaries=summaries,
        significance=significance,
        accuracies={
            method: [float(v) for v in accuracies[method]] for method in methods
        },
    )


def _run_once(
    dataset: Dataset,
    methods: List[str],
    split_ratio: float,
    grid: HyperGrid,
    folds: int,
    index: int,
    seed: int,
) -> RunResult:
    train, test = split(dataset, ratio=split_ratio, seed=seed)
    accuracies: Dict[str, float] = {}
    chosen: Dict[str, Dict[str, float]] = {}

    for method in methods:
        spec = get_method(method)

        try:
            result = cross_validate(spec, train, grid=grid, folds=folds, seed=seed)
            model = spec.train(train, result.hyperparameters, seed=seed)
            accuracies[method] = binary_accuracy(model, test)
            chosen[method] = result.hyperparameters

        except TRAINING_ERRORS + (BaseEvaluationError, InvalidDatasetError) as err:
            LOGGER.warning("Run failed", run=index, method=method, error=str(err))
            accuracies[method] = float("nan")

    LOGGER.info("Run finished", run=index, accuracies=accuracies)

    return RunResult(
        index=index, seed=seed, accuracies=accuracies, hyperparameters=chosen
    )
