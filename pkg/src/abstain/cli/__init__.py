"""The ``abstain`` command line."""
from .app import cli
from .commands import COMMANDS

for _command in COMMANDS:
    cli.add_command(_command)


def main() -> None:
    cli(prog_name="abstain")


__all__ = ["cli", "main"]
