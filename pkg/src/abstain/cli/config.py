"""Plain ``key=value`` configuration files mapped onto Click's ``default_map``.

Blank lines and lines starting with ``#`` are ignored. Keys use the flag spelling
with dashes or underscores (``split-ratio``, ``lambda``) or the parameter name
(``lam``). An unscoped key applies to the group and to every command that has a
matching option; ``command.key`` applies to one command only. Options that take
several values read a comma-separated list.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import click
import structlog
from structlog.stdlib import BoundLogger

LOGGER: BoundLogger = structlog.stdlib.get_logger()


def read_config_file(path: Union[str, Path]) -> List[Tuple[Optional[str], str, str]]:
    """Parses a configuration file into ``(command, key, value)`` entries.

    Raises:
        click.BadParameter: If a line is not of the form ``key=value``.
    """
    entries: List[Tuple[Optional[str], str, str]] = []

    for number, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()

        if not line or line.startswith("#"):
            continue

        key, separator, value = line.partition("=")

        if not separator or not key.strip():
            raise click.BadParameter(
                f"Line {number} of {str(path)!r} is not of the form key=value: "
                f"{raw!r}",
                param_hint="--config",
            )

        command, dot, name = key.strip().rpartition(".")
        entries.append((command if dot else None, _normalize(name), value.strip()))

    return entries


def build_default_map(
    group: click.Group, entries: List[Tuple[Optional[str], str, str]]
) -> Dict[str, Any]:
    """Turns configuration entries into a nested ``default_map`` for ``group``.

    Raises:
        click.BadParameter: If a key matches no option, or a scope names no command.
    """
    default_map: Dict[str, Any] = {}
    used = [False] * len(entries)

    for index, (command_name, key, value) in enumerate(entries):
        if command_name is None:
            param = _find_param(group, key)

            if param is not None:
                default_map[param.name] = _convert(param, value)
                used[index] = True

    for name, command in group.commands.items():
        command_map: Dict[str, Any] = {}

        for index, (command_name, key, value) in enumerate(entries):
            if command_name not in (None, name):
                continue

            param = _find_param(command, key)

            if param is not None:
                command_map[param.name] = _convert(param, value)
                used[index] = True

        if command_map:
            default_map[name] = command_map

    for (command_name, key, _), was_used in zip(entries, used):
        if was_used:
            continue

        if command_name is not None and command_name not in group.commands:
            raise click.BadParameter(
                f"Unknown command {command_name!r} in configuration key "
                f"{command_name}.{key}.",
                param_hint="--config",
            )

        raise click.BadParameter(
            f"Configuration key {key!r} matches no option.", param_hint="--config"
        )

    LOGGER.debug("Configuration file applied", keys=len(entries))

    return default_map


def _find_param(command: click.Command, key: str) -> Optional[click.Parameter]:
    for param in command.params:
        if not isinstance(param, click.Option):
            continue

        names = {param.name or ""} | {
            _normalize(opt.lstrip("-")) for opt in param.opts + param.secondary_opts
        }

        if key in names:
            return param

    return None


def _convert(param: click.Parameter, value: str) -> Any:
    if param.multiple:
        return [item.strip() for item in value.split(",") if item.strip()]

    return value


def _normalize(key: str) -> str:
    return key.strip().replace("-", "_")
