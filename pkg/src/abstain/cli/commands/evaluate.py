from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

import click
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import (
    DEFAULT_SPLIT_RATIO,
    ToyConfig,
    generate_toy,
    read_dataset,
)
from abstain.sdk.datasets.toy import DEFAULT_TOTAL
from abstain.sdk.evaluation import (
    DEFAULT_FOLDS,
    DEFAULT_RUNS,
    ExperimentReport,
    format_comparison_table,
    report_frame,
    run_experiment,
    write_comparison_csv,
    write_report_csv,
    write_report_json,
)
from abstain.sdk.exceptions import InsufficientRunsError
from abstain.sdk.models import METHODS_REGISTRY

from ..options import (
    COMMA_SEPARATED,
    FLOAT_LIST,
    F,
    grid_from_options,
    grid_options,
    jobs_option,
    seed_option,
)
from .generate import build_housing_dataset

LOGGER: BoundLogger = structlog.stdlib.get_logger()

REFERENCE_RUNS = 500
TOY_RATIOS: Tuple[float, ...] = (0.1, 0.3, 0.5, 0.7, 0.9)
PD_KINDS: Tuple[str, ...] = ("pd1", "pd2", "pd3")


def common_experiment_options(function: F) -> F:
    """Options shared by ``evaluate`` and ``reproduce``."""
    decorators = [
        click.option(
            "--methods",
            type=COMMA_SEPARATED,
            default=",".join(METHODS_REGISTRY),
            show_default=True,
            help="Comma-separated method tags, in report order.",
        ),
        click.option(
            "--runs",
            type=click.IntRange(min=0),
            default=DEFAULT_RUNS,
            show_default=True,
            help="Random splits per dataset, at least 2.",
        ),
        click.option(
            "--split-ratio",
            type=click.FloatRange(min=0.0, max=1.0, min_open=True, max_open=True),
            default=DEFAULT_SPLIT_RATIO,
            show_default=True,
            help="Training fraction of every split.",
        ),
        click.option(
            "--folds",
            type=click.IntRange(min=2),
            default=DEFAULT_FOLDS,
            show_default=True,
            help="Cross-validation folds.",
        ),
        grid_options,
        seed_option,
        jobs_option,
    ]

    for decorator in reversed(decorators):
        function = decorator(function)

    return function


@click.command("evaluate")
@click.option(
    "--dataset",
    type=click.Path(dir_okay=False),
    default=None,
    help="The dataset CSV to split repeatedly.",
)
@common_experiment_options
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Report CSV with one row per method.",
)
@click.option(
    "--json",
    "json_output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Report JSON, including per-run accuracies and pairwise t-tests.",
)
def evaluate(
    dataset: Optional[str],
    methods: Sequence[str],
    runs: int,
    split_ratio: float,
    folds: int,
    seed: int,
    jobs: int,
    output: Optional[str],
    json_output: Optional[str],
    **grid: Any,
) -> None:
    """Compare methods on one dataset over repeated random splits.

    Each run cross-validates every method on the training part and scores the
    positive and negative test samples. The best set holds the highest mean and
    every method a Welch t-test at the 5% level cannot separate from it.
    """
    _require_runs(runs)

    if dataset is None:
        raise click.UsageError("evaluate needs --dataset.")

    data = read_dataset(dataset)
    click.echo(f"{data.name}: {len(data)} samples, {data.counts()}")

    report = run_experiment(
        data,
        methods=list(methods),
        runs=runs,
        split_ratio=split_ratio,
        grid=grid_from_options(grid),
        seed=seed,
        folds=folds,
        jobs=jobs,
    )

    if output is not None:
        write_report_csv(report, output)

    if json_output is not None:
        write_report_json(report, json_output)

    click.echo(format_report(report))


@click.command("reproduce")
@click.argument("suite", type=click.Choice(("toy", "pd"), case_sensitive=False))
@common_experiment_options
@click.option(
    "--ratios",
    type=FLOAT_LIST,
    default=",".join(f"{r:g}" for r in TOY_RATIOS),
    show_default=True,
    help="Toy only: ambiguity ratios, one table column each.",
)
@click.option(
    "--total",
    type=click.IntRange(min=4),
    default=DEFAULT_TOTAL,
    show_default=True,
    help="Toy only: samples per toy dataset.",
)
@click.option(
    "--housing",
    type=click.Path(dir_okay=False),
    envvar="ABSTAIN_HOUSING_CSV",
    default=None,
    help="PD only: the housing table.",
)
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False),
    default=".",
    show_default=True,
    help="Directory for the table CSV and one report JSON per column.",
)
def reproduce(
    suite: str,
    methods: Sequence[str],
    runs: int,
    split_ratio: float,
    folds: int,
    seed: int,
    jobs: int,
    ratios: Sequence[float],
    total: int,
    housing: Optional[str],
    output_dir: str,
    **grid: Any,
) -> None:
    """Rebuild the toy-ratio table or the PD1/PD2/PD3 table.

    Writes <suite>_table.csv with mean, sd and best-set columns per dataset and a
    report JSON per dataset, and prints the table with best-set entries starred.
    """
    _require_runs(runs)
    suite = suite.lower()

    if suite == "pd":
        if housing is None:
            raise click.UsageError("reproduce pd needs --housing.")

        datasets = {
            kind.upper(): build_housing_dataset(kind, housing, seed)
            for kind in PD_KINDS
        }

    else:
        datasets = {
            f"r={r:g}": generate_toy(ToyConfig(r=r, total=total, seed=seed))
            for r in ratios
        }

    directory = Path(output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    reports: Dict[str, ExperimentReport] = {}

    for label, data in datasets.items():
        click.echo(f"{label}: {len(data)} samples, {data.counts()}", err=True)
        reports[label] = run_experiment(
            data,
            methods=list(methods),
            runs=runs,
            split_ratio=split_ratio,
            grid=grid_from_options(grid),
            seed=seed,
            folds=folds,
            jobs=jobs,
        )
        write_report_json(reports[label], directory / f"{suite}_{data.name}.json")

    write_comparison_csv(reports, directory / f"{suite}_table.csv")

    if runs < REFERENCE_RUNS:
        click.echo(
            f"note: {runs} runs per dataset; the reference tables averaged "
            f"{REFERENCE_RUNS}, so standard deviations and best sets may differ.",
            err=True,
        )

    click.echo(format_comparison_table(reports))


def format_report(report: ExperimentReport) -> str:
    frame = report_frame(report)
    lines = [
        f"{report.dataset}: {report.runs} runs, split ratio {report.split_ratio:.4g}",
        frame.to_string(index=False, float_format=lambda value: f"{value:.4f}"),
        f"best set: {', '.join(report.best_set) or '(none)'}",
    ]

    return "\n".join(lines)


def _require_runs(runs: int) -> None:
    if runs < 2:
        raise InsufficientRunsError(
            f"At least 2 runs are needed for the t-tests, got {runs}."
        )
