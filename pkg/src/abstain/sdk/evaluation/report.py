"""The schemas and writers for experiment reports.

.. |ExperimentReport| replace:: :py:class:`~.experiment.ExperimentReport`
.. |MethodSummary| replace:: :py:class:`~.experiment.MethodSummary`
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Mapping, Union

import pandas as pd
import structlog
from marshmallow import Schema, fields, post_load
from structlog.stdlib import BoundLogger

from .experiment import ExperimentReport, MethodSummary

LOGGER: BoundLogger = structlog.stdlib.get_logger()

REPORT_COLUMNS = ["method", "mean", "sd", "n", "failed", "valid", "best"]
REPORT_FLOAT_FORMAT = "%.6f"


class MethodSummarySchema(Schema):
    """The schema for the data stored in a |MethodSummary| object."""

    __model__ = MethodSummary

    method = fields.String(required=True, metadata=dict(description="Method tag."))
    mean = fields.Float(
        required=True,
        allow_nan=True,
        metadata=dict(description="Mean test accuracy over successful runs."),
    )
    sd = fields.Float(
        required=True,
        allow_nan=True,
        metadata=dict(description="Standard deviation of the test accuracy."),
    )
    n = fields.Integer(
        required=True, metadata=dict(description="Number of successful runs.")
    )
    failed = fields.Integer(
        required=True, metadata=dict(description="Number of failed runs.")
    )
    valid = fields.Boolean(
        required=True,
        metadata=dict(description="Whether enough runs succeeded to compare."),
    )
    best = fields.Boolean(
        required=True, metadata=dict(description="Whether the method is best.")
    )

    @post_load
    def deserialize_object(self, data: Dict[str, Any], **kwargs) -> MethodSummary:
        return self.__model__(**data)


class ExperimentReportSchema(Schema):
    """The schema for the data stored in an |ExperimentReport| object.

    Attributes:
        dataset: The dataset name.
        runs: The number of runs.
        seed: The master seed.
        splitRatio: The training fraction of every split.
        summaries: One |MethodSummary| per method.
        significance: Pairwise 5% Welch t-test decisions.
        accuracies: Per-run test accuracies, ``NaN`` for failed runs.
    """

    __model__ = ExperimentReport

    dataset = fields.String(required=True, metadata=dict(description="Dataset name."))
    runs = fields.Integer(required=True, metadata=dict(description="Run count."))
    seed = fields.Integer(required=True, metadata=dict(description="Master seed."))
    splitRatio = fields.Float(
        attribute="split_ratio",
        required=True,
        metadata=dict(description="The training fraction of every split."),
    )
    summaries = fields.List(
        fields.Nested(MethodSummarySchema),
        required=True,
        metadata=dict(description="Per-method aggregates."),
    )
    significance = fields.Dict(
        keys=fields.String(),
        values=fields.Dict(keys=fields.String(), values=fields.Boolean()),
        metadata=dict(description="Pairwise significance at the 5% level."),
    )
    accuracies = fields.Dict(
        keys=fields.String(),
        values=fields.List(fields.Float(allow_nan=True)),
        metadata=dict(description="Per-run test accuracies."),
    )

    @post_load
    def deserialize_object(self, data: Dict[str, Any], **kwargs) -> ExperimentReport:
        return self.__model__(**data)


def report_frame(report: ExperimentReport) -> pd.DataFrame:
    rows = [
        {column: getattr(summary, column) for column in REPORT_COLUMNS}
        for summary in report.summaries
    ]

    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def write_report_csv(report: ExperimentReport, path: Union[str, Path]) -> Path:
    path = Path(path)
    frame = report_frame(report)
    frame["valid"] = frame["valid"].astype(int)
    frame["best"] = frame["best"].astype(int)
    frame.to_csv(path, index=False, float_format=REPORT_FLOAT_FORMAT)
    LOGGER.debug("Report CSV written", path=str(path))

    return path


def write_report_json(report: ExperimentReport, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(ExperimentReportSchema().dump(report), indent=2) + "\n")
    LOGGER.debug("Report JSON written", path=str(path))

    return path


def read_report_json(path: Union[str, Path]) -> ExperimentReport:
    report: ExperimentReport = ExperimentReportSchema().load(
        json.loads(Path(path).read_text())
    )

    return report


def comparison_table(reports: Mapping[str, ExperimentReport]) -> pd.DataFrame:
    """Lays several reports side by side, one row per method.

    Each report contributes ``<column>_mean``, ``<column>_sd`` and ``<column>_best``
    columns, keyed by the mapping's labels in insertion order.
    """
    methods: Dict[str, Dict[str, Any]] = {}

    for label, report in reports.items():
        for summary in report.summaries:
            row = methods.setdefault(summary.method, {"method": summary.method})
            row[f"{label}_mean"] = summary.mean
            row[f"{label}_sd"] = summary.sd
            row[f"{label}_best"] = int(summary.best)

    columns = ["method"] + [
        f"{label}_{suffix}" for label in reports for suffix in ("mean", "sd", "best")
    ]

    return pd.DataFrame(list(methods.values()), columns=columns)


def format_comparison_table(reports: Mapping[str, ExperimentReport]) -> str:
    """Renders ``mean±sd`` cells, with ``*`` marking the best set."""
    frame = comparison_table(reports)
    display = pd.DataFrame({"method": frame["method"]})

    for label in reports:
        display[label] = [
            f"{mean:.3f}±{sd:.3f}{'*' if best else ' '}"
            for mean, sd, best in zip(
                frame[f"{label}_mean"], frame[f"{label}_sd"], frame[f"{label}_best"]
            )
        ]

    return display.to_string(index=False)


def write_comparison_csv(
    reports: Mapping[str, ExperimentReport], path: Union[str, Path]
) -> Path:
    path = Path(path)
    comparison_table(reports).to_csv(
        path, index=False, float_format=REPORT_FLOAT_FORMAT
    )
    LOGGER.debug("Comparison table written", path=str(path))

    return path
