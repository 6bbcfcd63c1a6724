from __future__ import annotations

from typing import Optional

import click

from abstain.sdk.exceptions import TheoryCheckFailedError
from abstain.sdk.theory import run_theory_suite
from abstain.sdk.theory.suite import (
    DEFAULT_BOUND_SAMPLES,
    DEFAULT_GAP_SAMPLES,
    DEFAULT_GRID_STEP,
    DEFAULT_POSTERIORS,
    DEFAULT_SIMPLEX_STEP,
)

from ..options import seed_option

_STEP = click.FloatRange(min=0.0, max=1.0, min_open=True)


@click.command("verify-theory")
@click.option(
    "--step",
    type=_STEP,
    default=DEFAULT_SIMPLEX_STEP,
    show_default=True,
    help="Resolution of the probability-simplex sweeps.",
)
@click.option(
    "--posteriors",
    type=click.IntRange(min=1),
    default=DEFAULT_POSTERIORS,
    show_default=True,
    help="Random posteriors per rejection cost in the surrogate minimizer check.",
)
@click.option(
    "--grid-step",
    type=click.FloatRange(min=0.0, min_open=True),
    default=DEFAULT_GRID_STEP,
    show_default=True,
    help="Resolution of the (h, r) grid search.",
)
@click.option(
    "--bound-samples",
    type=click.IntRange(min=1),
    default=DEFAULT_BOUND_SAMPLES,
    show_default=True,
    help="Random tuples per pointwise bound sweep.",
)
@click.option(
    "--gap-samples",
    type=click.IntRange(min=1),
    default=DEFAULT_GAP_SAMPLES,
    show_default=True,
    help="Random tuples of the relabeling risk-gap sweep.",
)
@click.option(
    "--debug-eta",
    type=click.FloatRange(min=1.0),
    default=None,
    help="Replace the calibrated eta in the minimizer check. A negative control.",
)
@seed_option
def verify_theory(
    step: float,
    posteriors: int,
    grid_step: float,
    bound_samples: int,
    gap_samples: int,
    debug_eta: Optional[float],
    seed: int,
) -> None:
    """Check the 0-1-c-d and surrogate theory numerically.

    Prints one line per check. Exits with status 4 if any check fails.
    """
    results = run_theory_suite(
        step=step,
        posteriors=posteriors,
        grid_step=grid_step,
        seed=seed,
        eta=debug_eta,
        bound_samples=bound_samples,
        gap_samples=gap_samples,
    )

    for result in results:
        click.echo(str(result))

    failed = [result.name for result in results if not result.passed]

    if failed:
        raise TheoryCheckFailedError(f"Failed checks: {', '.join(failed)}.")
