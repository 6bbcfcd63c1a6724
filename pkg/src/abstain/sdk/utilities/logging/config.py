import logging
import sys
from logging import getLogger
from typing import (
    IO,
    Any,
    Callable,
    List,
    Mapping,
    MutableMapping,
    Optional,
    Tuple,
    Union,
)

import structlog

ProcessorType = Callable[
    [Any, str, MutableMapping[str, Any]],
    Union[Mapping[str, Any], str, bytes, Tuple[Any, ...]],
]

ALLOWED_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def attach_stream_handler(
    as_json: bool,
    logger: Optional[logging.Logger] = None,
    stream: Optional[IO[str]] = None,
) -> logging.Handler:
    """Routes stdlib and structlog records through a rendered stream handler.

    Records are written to stderr unless another stream is given, which keeps the
    tables that the command line prints to stdout free of log lines.

    Args:
        as_json: Render each record as a JSON object instead of console text.
        logger: The logger receiving the handler. Defaults to the root logger.
        stream: The text stream to write to. Defaults to :py:data:`sys.stderr`.

    Returns:
        The attached handler, so that callers may detach it again.
    """
    logger = logger or getLogger()
    log_processor: ProcessorType = _get_structlog_processor(as_json)

    handler = logging.StreamHandler(stream or sys.stderr)
    formatter = structlog.stdlib.ProcessorFormatter(
        processor=log_processor,
        foreign_pre_chain=[
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
        ],
    )
    handler.setFormatter(formatter)
    logging.captureWarnings(True)
    logger.addHandler(handler)

    return handler


def configure_structlog() -> None:
    processors: List[Any] = [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
    ]

    structlog.configure_once(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def set_logging_level(level: str, logger: Optional[logging.Logger] = None) -> str:
    """Sets the logger level, falling back to INFO for unrecognized names.

    Returns:
        The level name that was applied.
    """
    logger = logger or getLogger()
    applied = _get_logging_level(level.strip().upper())
    logger.setLevel(applied)

    return applied


def _get_structlog_processor(as_json: bool) -> ProcessorType:
    if as_json:
        log_processor: ProcessorType = structlog.processors.JSONRenderer()
        return log_processor

    log_processor = structlog.dev.ConsoleRenderer(colors=False)
    return log_processor


def _get_logging_level(level: str) -> str:
    if level not in ALLOWED_LEVELS:
        level = "INFO"

    return level
