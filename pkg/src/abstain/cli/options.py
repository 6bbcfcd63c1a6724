"""Option decorators and parameter types shared by several commands."""
from __future__ import annotations

from typing import Any, Callable, Optional, Tuple, TypeVar

import click

from abstain.sdk.evaluation import HyperGrid

F = TypeVar("F", bound=Callable[..., Any])

HYPERPARAMETER_FLAGS: Tuple[Tuple[str, str, str], ...] = (
    ("--lambda", "lam", "Regularization of the classifier weights."),
    ("--lambda-prime", "lam_prime", "Regularization of the rejector weights."),
    ("--sigma", "sigma", "Gaussian basis width."),
    ("--sigma-prime", "sigma_prime", "Heat-kernel width of the LapSVM graph."),
    ("--tau", "tau", "Weight of the LapSVM smoothness term."),
    ("--c", "c", "Rejection cost, in (0, 0.5)."),
    ("--d", "d", "Ambiguity cost, in (0, 1]."),
)


class FloatListParamType(click.ParamType):
    """A comma-separated list of floats, such as ``1e-3,1e-5``."""

    name = "float-list"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Tuple[float, ...]:
        if isinstance(value, (list, tuple)):
            return tuple(float(v) for v in value)

        try:
            values = tuple(
                float(item) for item in str(value).split(",") if item.strip()
            )

        except ValueError:
            self.fail(
                f"{value!r} is not a comma-separated list of numbers.", param, ctx
            )

        if not values:
            self.fail("The list must not be empty.", param, ctx)

        return values


class CommaSeparatedParamType(click.ParamType):
    """A comma-separated list of strings."""

    name = "list"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Tuple[str, ...]:
        if isinstance(value, (list, tuple)):
            return tuple(str(v).strip() for v in value)

        return tuple(item.strip() for item in str(value).split(",") if item.strip())


FLOAT_LIST = FloatListParamType()
COMMA_SEPARATED = CommaSeparatedParamType()


def hyperparameter_options(function: F) -> F:
    """Adds one optional float flag per hyperparameter."""
    for flag, name, help_text in reversed(HYPERPARAMETER_FLAGS):
        function = click.option(
            flag, name, type=click.FloatRange(min=0.0), default=None, help=help_text
        )(function)

    return function


def grid_options(function: F) -> F:
    """Adds one ``--<flag>-grid`` list option per hyperparameter."""
    for flag, name, help_text in reversed(HYPERPARAMETER_FLAGS):
        function = click.option(
            f"{flag}-grid",
            f"{name}_grid",
            type=FLOAT_LIST,
            default=None,
            help=f"Cross-validation candidates. {help_text}",
        )(function)

    return function


def grid_from_options(options: dict) -> HyperGrid:
    """Builds a grid from the values collected by :py:func:`grid_options`."""
    return HyperGrid().with_overrides(
        **{name: options.get(f"{name}_grid") for _, name, _ in HYPERPARAMETER_FLAGS}
    )


def seed_option(function: F) -> F:
    return click.option(
        "--seed",
        type=click.INT,
        default=0,
        show_default=True,
        help="Seed of every random draw.",
    )(function)


def jobs_option(function: F) -> F:
    return click.option(
        "--jobs",
        type=click.INT,
        default=-1,
        show_default=True,
        help="Worker processes for independent runs, -1 for all cores.",
    )(function)


def output_option(required: bool = True, help_text: str = "Output file.") -> Callable:
    return click.option(
        "-o",
        "--output",
        type=click.Path(dir_okay=False, resolve_path=True),
        required=required,
        help=help_text,
    )
