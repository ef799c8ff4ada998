"""Utility modules."""

from cellricci.utils.logger import logger, setup_logging
from cellricci.utils.rationals import (
    format_decimal,
    format_rational,
    parse_alpha,
    parse_rational,
)

__all__ = [
    "logger",
    "setup_logging",
    "format_decimal",
    "format_rational",
    "parse_alpha",
    "parse_rational",
]
