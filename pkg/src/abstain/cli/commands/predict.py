from __future__ import annotations

import click
import numpy as np
import pandas as pd
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import read_dataset
from abstain.sdk.datasets.io import FLOAT_FORMAT
from abstain.sdk.exceptions import KernelDimensionError
from abstain.sdk.models import binary_accuracy, load_model, predict_batch

from ..options import output_option

LOGGER: BoundLogger = structlog.stdlib.get_logger()


@click.command("predict")
@click.argument("model_file", metavar="MODEL", type=click.Path(dir_okay=False))
@click.argument("dataset", type=click.Path(dir_okay=False))
@output_option(help_text="The prediction CSV to write.")
def predict(model_file: str, dataset: str, output: str) -> None:
    """Apply a trained MODEL to every row of the DATASET CSV.

    The output repeats the features and labels and adds the columns h, r,
    prediction (the sign of h) and rejected (r <= 0). Accuracy on the positive and
    negative rows and the rejection rate are printed.
    """
    model = load_model(model_file)
    data = read_dataset(dataset)

    if data.feature_dim != model.basis.feature_dim:
        raise KernelDimensionError(
            f"The model expects {model.basis.feature_dim} features, "
            f"{data.name!r} has {data.feature_dim}."
        )

    predictions = predict_batch(model, data.features)
    rejected = np.array([p.rejected for p in predictions], dtype=bool)

    frame = pd.DataFrame(
        data.features, columns=[f"x{i + 1}" for i in range(data.feature_dim)]
    )
    frame["label"] = data.labels
    frame["h"] = [p.h_value for p in predictions]
    frame["r"] = [p.r_value for p in predictions]
    frame["prediction"] = [p.label for p in predictions]
    frame["rejected"] = rejected.astype(int)
    frame.to_csv(output, index=False, float_format=FLOAT_FORMAT)
    LOGGER.info("Predictions written", path=output, rows=len(frame))

    click.echo(f"{data.name}: {len(data)} samples, {data.counts()}")

    if np.any(data.binary_mask):
        click.echo(f"accuracy: {binary_accuracy(model, data):.6f}")

    click.echo(f"rejected: {int(rejected.sum())} of {len(data)}")
