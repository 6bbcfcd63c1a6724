"""The schemas for serializing/deserializing trained models.

.. |TrainedModel| replace:: :py:class:`~.model.TrainedModel`
.. |LossParams| replace:: :py:class:`~abstain.sdk.losses.LossParams`
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
import structlog
from marshmallow import Schema, ValidationError, fields, post_load, pre_dump
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import (
    BaseKernelError,
    BaseLossError,
    BaseModelError,
    ModelFileError,
)
from abstain.sdk.kernels import BasisSet
from abstain.sdk.losses import LossParams
from abstain.sdk.qp import SolverStatus

from .model import TrainedModel

LOGGER: BoundLogger = structlog.stdlib.get_logger()

MODEL_FORMAT_VERSION = 1


class LossParamsSchema(Schema):
    """The schema for the data stored in a |LossParams| object."""

    __model__ = LossParams

    c = fields.Float(required=True, metadata=dict(description="Rejection cost."))
    d = fields.Float(required=True, metadata=dict(description="Ambiguity penalty."))
    alpha = fields.Float(
        required=True, metadata=dict(description="Margin slope of the surrogate.")
    )
    beta = fields.Float(
        required=True, metadata=dict(description="Rejection slope of the surrogate.")
    )
    eta = fields.Float(
        required=True, metadata=dict(description="Rejection scale of the surrogate.")
    )

    @post_load
    def deserialize_object(self, data: Dict[str, Any], **kwargs) -> LossParams:
        return self.__model__(**data)


class TrainedModelSchema(Schema):
    """The schema for the data stored in a |TrainedModel| object.

    Attributes:
        formatVersion: The version of the model file layout.
        method: The method tag.
        sigma: The Gaussian basis width.
        centers: The basis centers, one list of coordinates per center.
        w: The classifier coefficients.
        u: The rejector coefficients.
        lossParams: The 0-1-c-d penalties and surrogate shape, or null.
        hyperparameters: The hyperparameters used for training.
        objective: The optimal value of the final training program.
        status: The solver status of the final training program.
    """

    __model__ = TrainedModel

    formatVersion = fields.Integer(
        attribute="format_version",
        load_default=MODEL_FORMAT_VERSION,
        metadata=dict(description="The version of the model file layout."),
    )
    method = fields.String(required=True, metadata=dict(description="Method tag."))
    sigma = fields.Float(
        required=True, metadata=dict(description="The Gaussian basis width.")
    )
    centers = fields.List(
        fields.List(fields.Float()),
        required=True,
        metadata=dict(description="The basis centers."),
    )
    w = fields.List(
        fields.Float(), required=True, metadata=dict(description="Classifier weights.")
    )
    u = fields.List(
        fields.Float(), required=True, metadata=dict(description="Rejector weights.")
    )
    lossParams = fields.Nested(
        LossParamsSchema,
        attribute="loss_params",
        allow_none=True,
        load_default=None,
        metadata=dict(description="The loss parameters, if the method has any."),
    )
    hyperparameters = fields.Dict(
        keys=fields.String(),
        values=fields.Float(),
        load_default=dict,
        metadata=dict(description="The hyperparameters used for training."),
    )
    objective = fields.Float(
        allow_nan=True,
        load_default=float("nan"),
        metadata=dict(description="The optimal value of the training program."),
    )
    status = fields.String(
        load_default=SolverStatus.CONVERGED.value,
        metadata=dict(description="The solver status of the training program."),
    )

    @pre_dump
    def extract_data_from_model(
        self, data: TrainedModel, many: bool, **kwargs
    ) -> Dict[str, Any]:
        """Flattens the |TrainedModel| arrays into lists of floats."""
        return {
            "format_version": MODEL_FORMAT_VERSION,
            "method": data.method,
            "sigma": data.basis.sigma,
            "centers": data.basis.centers.tolist(),
            "w": data.w.tolist(),
            "u": data.u.tolist(),
            "loss_params": data.loss_params,
            "hyperparameters": dict(data.hyperparameters),
            "objective": float(data.objective),
            "status": SolverStatus(data.status).value,
        }

    @post_load
    def deserialize_object(self, data: Dict[str, Any], **kwargs) -> TrainedModel:
        """Makes a |TrainedModel| object from the validated data."""
        if data.pop("format_version") != MODEL_FORMAT_VERSION:
            raise ValidationError("Unsupported model format version.", "formatVersion")

        basis = BasisSet(
            centers=np.array(data.pop("centers"), dtype=float),
            sigma=data.pop("sigma"),
        )

        return self.__model__(
            basis=basis,
            w=np.array(data.pop("w"), dtype=float),
            u=np.array(data.pop("u"), dtype=float),
            status=SolverStatus(data.pop("status")),
            **data,
        )


def save_model(model: TrainedModel, path: Union[str, Path]) -> Path:
    path = Path(path)
    document = TrainedModelSchema().dump(model)

    try:
        path.write_text(json.dumps(document, indent=2) + "\n")

    except OSError as err:
        raise ModelFileError(f"Cannot write model to {str(path)!r}: {err}") from err

    LOGGER.debug("Model saved", path=str(path), method=model.method)

    return path


def load_model(path: Union[str, Path]) -> TrainedModel:
    """Reads a model file written by :py:func:`save_model`.

    Raises:
        ModelFileError: If the file is missing, is not JSON, or does not describe a
            valid model.
    """
    path = Path(path)

    try:
        document = json.loads(path.read_text())

    except (OSError, UnicodeDecodeError) as err:
        raise ModelFileError(f"Cannot read model file {str(path)!r}: {err}") from err

    except json.JSONDecodeError as err:
        raise ModelFileError(f"Model file {str(path)!r} is not JSON: {err}") from err

    try:
        model: TrainedModel = TrainedModelSchema().load(document)

    except ValidationError as err:
        raise ModelFileError(
            f"Model file {str(path)!r} is invalid: {err.messages}"
        ) from err

    except (BaseKernelError, BaseLossError, BaseModelError, ValueError) as err:
        raise ModelFileError(f"Model file {str(path)!r} is invalid: {err}") from err

    return model
