"""Utility functions and helpers."""

from .logger import setup_logger
from .helpers import (
    format_rational,
    parse_rational,
    to_json_ready,
    from_json_ready,
    save_json,
    load_json,
    log_duration,
)

__all__ = [
    "setup_logger",
    "format_rational",
    "parse_rational",
    "to_json_ready",
    "from_json_ready",
    "save_json",
    "load_json",
    "log_duration",
]
