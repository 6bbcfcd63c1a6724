from .cross_validation import DEFAULT_FOLDS, CrossValidationResult, cross_validate
from .experiment import (
    DEFAULT_RUNS,
    ExperimentReport,
    MethodSummary,
    RunResult,
    build_report,
    run_experiment,
)
from .grid import HyperGrid
from .report import (
    ExperimentReportSchema,
    comparison_table,
    format_comparison_table,
    read_report_json,
    report_frame,
    write_comparison_csv,
    write_report_csv,
    write_report_json,
)
from .statistics import SIGNIFICANCE_LEVEL, WelchTestResult, welch_t_test

__all__ = [
    "CrossValidationResult",
    "DEFAULT_FOLDS",
    "DEFAULT_RUNS",
    "ExperimentReport",
    "ExperimentReportSchema",
    "HyperGrid",
    "MethodSummary",
    "RunResult",
    "SIGNIFICANCE_LEVEL",
    "WelchTestResult",
    "build_report",
    "comparison_table",
    "cross_validate",
    "format_comparison_table",
    "read_report_json",
    "report_frame",
    "run_experiment",
    "welch_t_test",
    "write_comparison_csv",
    "write_report_csv",
    "write_report_json",
]
