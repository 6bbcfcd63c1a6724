"""The ``abstain`` command group, its logging setup and its exit codes."""
from __future__ import annotations

import logging
import sys
from typing import Any, List, Optional, Sequence

import click
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.exceptions import (
    BaseAbstainError,
    BaseEvaluationError,
    NumericalFailureError,
    TheoryCheckFailedError,
    UnknownMethodError,
)
from abstain.sdk.utilities.logging import (
    ALLOWED_LEVELS,
    attach_stream_handler,
    configure_structlog,
    set_logging_level,
)

from .config import build_default_map, read_config_file

LOGGER: BoundLogger = structlog.stdlib.get_logger()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3
EXIT_THEORY = 4

_HANDLERS: List[logging.Handler] = []


def exit_code_for(error: BaseException) -> int:
    """Maps an error raised by a command onto the documented exit code."""
    if isinstance(error, TheoryCheckFailedError):
        return EXIT_THEORY

    if isinstance(error, NumericalFailureError):
        return EXIT_NUMERICAL

    if isinstance(error, (BaseEvaluationError, UnknownMethodError)):
        return EXIT_USAGE

    return EXIT_DATA


class AbstainGroup(click.Group):
    """A command group that turns library errors into exit codes."""

    def main(  # type: ignore[override]
        self,
        args: Optional[Sequence[str]] = None,
        prog_name: Optional[str] = None,
        **extra: Any,
    ) -> Any:
        extra.pop("standalone_mode", None)

        try:
            result = super().main(
                args=args, prog_name=prog_name, standalone_mode=False, **extra
            )

        except click.exceptions.Exit as err:
            sys.exit(err.exit_code)

        except click.ClickException as err:
            err.show()
            sys.exit(EXIT_USAGE)

        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)

        except (BaseAbstainError, OSError) as err:
            click.echo(f"Error: {err}", err=True)
            sys.exit(exit_code_for(err))

        sys.exit(result if isinstance(result, int) else EXIT_OK)


def _load_config(ctx: click.Context, param: click.Parameter, value: Any) -> Any:
    if value is None or ctx.resilient_parsing:
        return value

    group = ctx.command

    if not isinstance(group, click.Group):
        return value

    ctx.default_map = build_default_map(group, read_config_file(value))

    return value


def _configure_logging(level: str, as_json: bool) -> None:
    root = logging.getLogger()

    while _HANDLERS:
        root.removeHandler(_HANDLERS.pop())

    configure_structlog()
    _HANDLERS.append(attach_stream_handler(as_json=as_json, logger=root))
    set_logging_level(level, logger=root)


@click.group(cls=AbstainGroup)
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    callback=_load_config,
    is_eager=True,
    expose_value=False,
    help="A key=value file with option defaults. Command-line flags win.",
)
@click.option(
    "--log-level",
    type=click.Choice(ALLOWED_LEVELS, case_sensitive=False),
    envvar="ABSTAIN_LOG_LEVEL",
    default="WARNING",
    show_default=True,
    help="Logging verbosity. Log records go to stderr.",
)
@click.option(
    "--log-json/--no-log-json",
    envvar="ABSTAIN_LOG_AS_JSON",
    default=False,
    show_default=True,
    help="Render log records as JSON.",
)
@click.version_option(package_name="abstain")
def cli(log_level: str, log_json: bool) -> None:
    """Kernel classifiers that reject ambiguous inputs.

    Generate or load datasets, train any of the seven supported methods, compare
    them over repeated random splits, and check the theory of the 0-1-c-d loss.
    """
    _configure_logging(log_level, log_json)
