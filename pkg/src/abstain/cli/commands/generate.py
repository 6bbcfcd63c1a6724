from __future__ import annotations

from typing import Optional

import click
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import (
    Dataset,
    ToyConfig,
    build_pd1,
    build_pd2,
    build_pd3,
    generate_toy,
    in_mixed_region,
    load_regression_csv,
    write_dataset,
)
from abstain.sdk.datasets.toy import DEFAULT_TOTAL

from ..options import output_option, seed_option

LOGGER: BoundLogger = structlog.stdlib.get_logger()

DATASET_KINDS = ("toy", "pd1", "pd2", "pd3")


@click.command("generate")
@click.argument("kind", type=click.Choice(DATASET_KINDS, case_sensitive=False))
@click.option(
    "--r",
    "r",
    type=click.FloatRange(min=0.0, max=1.0),
    default=0.5,
    show_default=True,
    help="Toy only: share of the mixed region labeled ambiguous.",
)
@click.option(
    "--total",
    type=click.IntRange(min=4),
    default=DEFAULT_TOTAL,
    show_default=True,
    help="Toy only: number of samples.",
)
@click.option(
    "--housing",
    type=click.Path(dir_okay=False),
    envvar="ABSTAIN_HOUSING_CSV",
    default=None,
    help="PD only: the housing table, features then the median value column.",
)
@seed_option
@output_option(help_text="The dataset CSV to write.")
def generate(
    kind: str,
    r: float,
    total: int,
    housing: Optional[str],
    seed: int,
    output: str,
) -> None:
    """Generate the toy dataset or build PD1, PD2 or PD3 from a housing table.

    Class counts are printed to stdout.
    """
    kind = kind.lower()

    if kind == "toy":
        dataset = generate_toy(ToyConfig(r=r, total=total, seed=seed))

    else:
        if housing is None:
            raise click.UsageError(f"Building {kind} needs --housing.")

        dataset = build_housing_dataset(kind, housing, seed)

    write_dataset(dataset, output)
    LOGGER.info("Dataset generated", kind=kind, path=output, rows=len(dataset))
    click.echo(describe_counts(dataset, toy=kind == "toy"))


def build_housing_dataset(kind: str, housing: str, seed: int) -> Dataset:
    features, targets = load_regression_csv(housing)

    if kind == "pd1":
        return build_pd1(features, targets)

    if kind == "pd2":
        return build_pd2(features, targets, seed=seed)

    return build_pd3(features, targets, seed=seed)


def describe_counts(dataset: Dataset, toy: bool = False) -> str:
    """One line of class counts, split by region for the toy layout."""
    counts = dataset.counts()
    lines = [f"{dataset.name}: {len(dataset)} samples, {counts}"]

    if toy:
        mixed = in_mixed_region(dataset.features)

        for region, mask in (("separable", ~mixed), ("mixed", mixed)):
            part = dataset.subset(mask.nonzero()[0])
            lines.append(f"  {region}: {part.counts()}")

    return "\n".join(lines)
