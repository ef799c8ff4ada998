"""
Logging configuration for cellricci.

Uses loguru. Reports go to stdout, so every sink here writes elsewhere:
stderr by default, plus an optional rotating file from ``settings.log_file``.
Records carry the complex-level context bound by callers (for example the
CLI subcommand) in ``extra``.
"""

import sys
from typing import Optional, TextIO

from loguru import logger

from cellricci.config import settings

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<magenta>{extra[command]}</magenta> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - "
    "<level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[command]} | {name}:{function}:{line} - {message}"


def _only_cellricci(record) -> bool:
    return record["name"].split(".", 1)[0] == "cellricci"


def setup_logging(level: Optional[str] = None, sink: Optional[TextIO] = None) -> None:
    """Configure application logging; ``sink`` defaults to stderr."""
    level = (level or settings.log_level).upper()

    logger.remove()
    logger.configure(extra={"command": "-"})

    logger.add(
        sink or sys.stderr,
        format=CONSOLE_FORMAT,
        level=level,
        filter=_only_cellricci,
        colorize=sink is None,
    )

    if settings.log_file:
        logger.add(
            settings.log_file,
            format=FILE_FORMAT,
            level=level,
            filter=_only_cellricci,
            rotation="10 MB",
            retention="7 days",
            compression="zip",
            enqueue=True,
        )

    logger.debug(f"Log level: {level}")


setup_logging()


__all__ = ["logger", "setup_logging"]
