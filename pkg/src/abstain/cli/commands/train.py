from __future__ import annotations

from typing import Dict, Mapping, Optional, Tuple

import click
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import read_dataset
from abstain.sdk.evaluation import DEFAULT_FOLDS, HyperGrid, cross_validate
from abstain.sdk.models import (
    TrainedModel,
    binary_accuracy,
    empirical_01cd_risk,
    empirical_surrogate_risk,
    get_method,
    save_model,
)

from ..options import hyperparameter_options, output_option, seed_option

LOGGER: BoundLogger = structlog.stdlib.get_logger()

DEFAULT_HYPERPARAMETERS: Dict[str, float] = {
    "lam": 1e-5,
    "lam_prime": 1e-5,
    "sigma": 10**0.5,
    "sigma_prime": 10**0.5,
    "tau": 1e-2,
    "c": 0.2,
    "d": 0.2,
}


@click.command("train")
@click.argument("method")
@click.argument("dataset", type=click.Path(dir_okay=False))
@hyperparameter_options
@click.option(
    "--alpha",
    type=click.FloatRange(min=0.0, min_open=True),
    default=None,
    help="Override of the calibrated surrogate slope alpha.",
)
@click.option(
    "--beta",
    type=click.FloatRange(min=0.0, min_open=True),
    default=None,
    help="Override of the calibrated surrogate slope beta.",
)
@click.option(
    "--eta",
    type=click.FloatRange(min=1.0),
    default=None,
    help="CAD-SVM only: override of the calibrated scale eta.",
)
@click.option(
    "--cv/--no-cv",
    default=False,
    show_default=True,
    help="Choose unset hyperparameters by cross-validation over the default grids.",
)
@click.option(
    "--folds",
    type=click.IntRange(min=2),
    default=DEFAULT_FOLDS,
    show_default=True,
    help="Cross-validation folds.",
)
@seed_option
@output_option(help_text="The model file to write.")
def train(
    method: str,
    dataset: str,
    alpha: Optional[float],
    beta: Optional[float],
    eta: Optional[float],
    cv: bool,
    folds: int,
    seed: int,
    output: str,
    **hyperparameters: Optional[float],
) -> None:
    """Train METHOD on the DATASET CSV and write the model file.

    Without --cv, unset hyperparameters take fixed defaults. With --cv, every
    hyperparameter given on the command line is held fixed and the others are
    searched over the default grids.
    """
    spec = get_method(method)
    data = read_dataset(dataset)
    click.echo(f"{data.name}: {len(data)} samples, {data.counts()}")

    given = {
        axis: value for axis, value in hyperparameters.items() if value is not None
    }
    shape = {
        key: value
        for key, value in (("alpha", alpha), ("beta", beta), ("eta", eta))
        if value is not None
    }

    if cv:
        grid = HyperGrid().with_overrides(
            **{axis: [value] for axis, value in given.items()}
        )
        chosen = cross_validate(
            spec, data, grid=grid, folds=folds, seed=seed, fixed=shape
        ).hyperparameters

    else:
        chosen = {
            axis: given.get(axis, DEFAULT_HYPERPARAMETERS[axis]) for axis in spec.axes
        }
        chosen.update(shape)

    LOGGER.info("Training", method=spec.tag, dataset=data.name, cv=cv, **chosen)
    model = spec.train(data, chosen, seed=seed)
    save_model(model, output)

    click.echo(describe_model(model, chosen))
    click.echo(f"training surrogate risk: {empirical_surrogate_risk(model, data):.6f}")

    costs = _costs(model, chosen)

    if costs is not None:
        risk = empirical_01cd_risk(model, data, c=costs[0], d=costs[1])
        click.echo(f"training 0-1-c-d risk: {risk:.6f}")

    click.echo(f"training accuracy: {binary_accuracy(model, data):.6f}")
    click.echo(f"model written to {output}")


def describe_model(model: TrainedModel, chosen: Mapping[str, float]) -> str:
    lines = [
        f"method: {model.method}",
        "hyperparameters: "
        + " ".join(f"{axis}={value:g}" for axis, value in chosen.items()),
    ]

    if model.loss_params is not None:
        params = model.loss_params
        lines.append(
            f"loss parameters: c={params.c:g} d={params.d:g} alpha={params.alpha:g} "
            f"beta={params.beta:g} eta={params.eta:g}"
        )

    lines.append(f"objective: {model.objective:.6g} ({model.status.value})")

    return "\n".join(lines)


def _costs(
    model: TrainedModel, chosen: Mapping[str, float]
) -> Optional[Tuple[float, float]]:
    if model.loss_params is not None:
        return model.loss_params.c, model.loss_params.d

    if "c" in chosen and "d" in chosen:
        return chosen["c"], chosen["d"]

    return None
