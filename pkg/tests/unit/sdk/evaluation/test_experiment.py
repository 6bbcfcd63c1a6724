from __future__ import annotations

import math

import numpy as np
import pytest

from abstain.sdk.exceptions import InsufficientRunsError, UnknownMethodError
from abstain.sdk.evaluation import HyperGrid, build_report, run_experiment

ONE_POINT_GRID = HyperGrid(
    lam_values=(1e-3,),
    lam_prime_values=(1e-3,),
    sigma_values=(0.5,),
    sigma_prime_values=(0.5,),
    tau_values=(0.1,),
    c_values=(0.2,),
    d_values=(0.2,),
)


def test_best_set_holds_methods_tied_with_the_top() -> None:
    report = build_report(
        {
            "a": [0.90, 0.91, 0.92, 0.90, 0.91],
            "b": [0.50, 0.52, 0.51, 0.50, 0.53],
            "c": [0.90, 0.92, 0.90, 0.91, 0.90],
        }
    )

    assert report.best_set == ["a", "c"]
    assert report.significance["a"]["b"] and report.significance["b"]["a"]
    assert not report.significance["a"]["c"]
    assert report.summary("b").mean == pytest.approx(0.512)
    assert report.summary("b").sd == pytest.approx(
        np.std([0.50, 0.52, 0.51, 0.50, 0.53], ddof=1)
    )


def test_identical_constant_accuracies_share_the_best_set() -> None:
    report = build_report(
        {
            "a": [0.502] * 5,
            "b": [0.502] * 5,
            "c": [0.40, 0.42, 0.41, 0.40, 0.43],
        }
    )

    assert report.best_set == ["a", "b"]
    assert not report.significance["a"]["b"]
    assert report.significance["a"]["c"]


def test_methods_with_many_failures_are_invalid() -> None:
    nan = float("nan")
    report = build_report(
        {"a": [0.8, 0.7, 0.75, 0.8], "b": [nan, 0.99, nan, 0.99]}, dataset="toy"
    )
    summary = report.summary("b")

    assert summary.failed == 2 and summary.n == 2
    assert not summary.valid and not summary.best
    assert report.best_set == ["a"]
    assert report.runs == 4


def test_no_valid_method_gives_an_empty_best_set() -> None:
    report = build_report({"a": [float("nan"), 0.5]})

    assert report.best_set == []
    assert math.isnan(report.summary("a").sd)


def test_unknown_summary() -> None:
    with pytest.raises(KeyError):
        build_report({"a": [0.1, 0.2]}).summary("z")


def test_experiment_needs_two_runs(toy_data) -> None:
    with pytest.raises(InsufficientRunsError):
        run_experiment(toy_data, ["svm"], runs=1)


def test_experiment_rejects_unknown_methods(toy_data) -> None:
    with pytest.raises(UnknownMethodError):
        run_experiment(toy_data, ["svm", "bogus"], runs=2)


@pytest.mark.slow
def test_experiment_is_reproducible_across_workers(toy_data) -> None:
    kwargs = dict(methods=["svm", "cad-svm"], runs=3, grid=ONE_POINT_GRID, seed=7)
    serial = run_experiment(toy_data, jobs=1, **kwargs)
    parallel = run_experiment(toy_data, jobs=2, **kwargs)

    assert serial.accuracies == parallel.accuracies
    assert serial.summaries == parallel.summaries
    assert [s.method for s in serial.summaries] == ["svm", "cad-svm"]
    assert all(0.0 <= a <= 1.0 for a in serial.accuracies["cad-svm"])
    assert serial.runs == 3 and serial.dataset == toy_data.name
