"""Plot-data exports. Nothing is rendered; every command writes a CSV."""
from __future__ import annotations

from typing import Tuple

import click
import numpy as np
import pandas as pd
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import project_pca, read_dataset
from abstain.sdk.datasets.io import FLOAT_FORMAT
from abstain.sdk.exceptions import KernelDimensionError
from abstain.sdk.losses import calibrated_params, loss_01cd, loss_mha
from abstain.sdk.models import load_model

from ..options import output_option

LOGGER: BoundLogger = structlog.stdlib.get_logger()

_RANGE = click.Tuple([float, float])


@click.command("project-2d")
@click.argument("dataset", type=click.Path(dir_okay=False))
@click.option(
    "--method",
    type=click.Choice(("pca",), case_sensitive=False),
    default="pca",
    show_default=True,
    help="Projection method.",
)
@output_option(help_text="CSV of x, y, label rows.")
def project_2d(dataset: str, method: str, output: str) -> None:
    """Project the DATASET onto its top two principal components."""
    data = read_dataset(dataset)
    projected = project_pca(data, components=2)

    frame = pd.DataFrame({"x": projected[:, 0], "y": projected[:, 1]})
    frame["label"] = data.labels
    frame.to_csv(output, index=False, float_format=FLOAT_FORMAT)
    LOGGER.info("Projection written", method=method, path=output, rows=len(frame))
    click.echo(f"{data.name}: {len(data)} samples, {data.counts()}")


@click.command("loss-curves")
@click.option(
    "--c",
    type=click.FloatRange(min=0.0, max=0.5, min_open=True, max_open=True),
    default=0.2,
    show_default=True,
    help="Rejection cost.",
)
@click.option(
    "--d",
    type=click.FloatRange(min=0.0, max=1.0, min_open=True),
    default=0.5,
    show_default=True,
    help="Ambiguity cost.",
)
@click.option("--h-range", type=_RANGE, default=(-3.0, 3.0), show_default=True)
@click.option("--r-range", type=_RANGE, default=(-3.0, 3.0), show_default=True)
@click.option(
    "--points",
    type=click.IntRange(min=2),
    default=61,
    show_default=True,
    help="Grid points per axis.",
)
@output_option(help_text="CSV of y, h, r, l01cd, lmha rows.")
def loss_curves(
    c: float,
    d: float,
    h_range: Tuple[float, float],
    r_range: Tuple[float, float],
    points: int,
    output: str,
) -> None:
    """Tabulate the 0-1-c-d loss and its MHA surrogate over an (h, r) grid.

    The surrogate uses the calibrated alpha, beta and eta of the rejection cost.
    """
    params = calibrated_params(c, d)
    h_grid, r_grid = np.meshgrid(
        np.linspace(*h_range, points), np.linspace(*r_range, points), indexing="ij"
    )
    h, r = h_grid.ravel(), r_grid.ravel()
    frames = []

    for y in (1, 0, -1):
        labels = np.full(h.shape, y)
        frames.append(
            pd.DataFrame(
                {
                    "y": labels,
                    "h": h,
                    "r": r,
                    "l01cd": loss_01cd(h, r, labels, params),
                    "lmha": loss_mha(h, r, labels, params),
                }
            )
        )

    frame = pd.concat(frames, ignore_index=True)
    frame.to_csv(output, index=False, float_format=FLOAT_FORMAT)
    click.echo(
        f"alpha={params.alpha:g} beta={params.beta:g} eta={params.eta:g}, "
        f"{len(frame)} rows written to {output}"
    )


@click.command("decision-map")
@click.argument("model_file", metavar="MODEL", type=click.Path(dir_okay=False))
@click.option("--x-range", type=_RANGE, default=(0.0, 1.0), show_default=True)
@click.option("--y-range", type=_RANGE, default=(0.0, 1.0), show_default=True)
@click.option(
    "--resolution",
    type=click.IntRange(min=2),
    default=101,
    show_default=True,
    help="Grid points per axis.",
)
@output_option(help_text="CSV of x1, x2, h, r, label, rejected rows.")
def decision_map(
    model_file: str,
    x_range: Tuple[float, float],
    y_range: Tuple[float, float],
    resolution: int,
    output: str,
) -> None:
    """Evaluate a two-feature MODEL on a regular grid of the given box."""
    model = load_model(model_file)

    if model.basis.feature_dim != 2:
        raise KernelDimensionError(
            f"A decision map needs a model of 2 features, got "
            f"{model.basis.feature_dim}."
        )

    x_grid, y_grid = np.meshgrid(
        np.linspace(*x_range, resolution),
        np.linspace(*y_range, resolution),
        indexing="ij",
    )
    points = np.column_stack([x_grid.ravel(), y_grid.ravel()])
    values = model.decision_values(points)

    frame = pd.DataFrame(
        {
            "x1": points[:, 0],
            "x2": points[:, 1],
            "h": values[:, 0],
            "r": values[:, 1],
            "label": np.where(values[:, 0] > 0, 1, -1),
            "rejected": (values[:, 1] <= 0).astype(int),
        }
    )
    frame.to_csv(output, index=False, float_format=FLOAT_FORMAT)
    click.echo(
        f"{model.method}: {len(frame)} grid points, "
        f"{int(frame['rejected'].sum())} rejected"
    )
