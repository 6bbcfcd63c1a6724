from .config import (
    ALLOWED_LEVELS,
    attach_stream_handler,
    configure_structlog,
    set_logging_level,
)

__all__ = [
    "ALLOWED_LEVELS",
    "attach_stream_handler",
    "configure_structlog",
    "set_logging_level",
]
