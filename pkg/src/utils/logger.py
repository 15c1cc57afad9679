"""
Logging Configuration for Newton Strata
=======================================
Sets up loguru-based logging with console and file output. Every record
carries a ``context`` field naming the command or sweep that produced it,
so one log file can hold runs of several subcommands.
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

_CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<magenta>{extra[context]}</magenta> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> | "
    "<level>{message}</level>"
)

_FILE_FORMAT = (
    "{time:YYYY-MM-DD HH:mm:ss} | "
    "{level: <8} | "
    "{extra[context]} | "
    "{name}:{function}:{line} | "
    "{message}"
)


def default_log_file() -> Path:
    """logs/newton.log under the first ancestor that has a logs/ directory, else the project root."""
    current_dir = Path(__file__).resolve().parent
    for parent in [current_dir] + list(current_dir.parents):
        logs_dir = parent / "logs"
        if logs_dir.is_dir():
            return logs_dir / "newton.log"
    logs_dir = current_dir.parents[1] / "logs"
    logs_dir.mkdir(parents=True, exist_ok=True)
    return logs_dir / "newton.log"


def setup_logger(
    log_level: str = "INFO",
    log_file: Optional[str] = None,
    context: str = "library",
    rotation: str = "10 MB",
    retention: str = "1 week",
    enable_console: bool = True,
    enable_file: bool = True,
):
    """
    Configure console and file sinks and return the logger.

    Console output goes to stderr so that command payloads on stdout stay
    machine-readable.

    Args:
        log_level: Minimum logging level (TRACE ... CRITICAL)
        log_file: Path to log file. If None, uses default_log_file()
        context: Tag written on every record, e.g. the CLI subcommand
        rotation: When to rotate log file (e.g., "10 MB", "1 day")
        retention: How long to keep old log files (e.g., "1 week", "30 days")
        enable_console: Whether to log to stderr
        enable_file: Whether to log to the file sink

    Returns:
        Configured logger instance

    Example:
        >>> logger = setup_logger(log_level="DEBUG", context="bgmu")
        >>> logger.info("Enumeration started")
    """
    logger.remove()
    logger.configure(extra={"context": context})

    if enable_console:
        logger.add(sys.stderr, level=log_level, format=_CONSOLE_FORMAT, colorize=None)

    target = None
    if enable_file:
        target = Path(log_file) if log_file else default_log_file()
        target.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            str(target),
            level=log_level,
            format=_FILE_FORMAT,
            rotation=rotation,
            retention=retention,
            compression="zip",
            enqueue=True,
        )

    logger.debug(f"Logger initialized - Level: {log_level}, context: {context}, file: {target}")
    return logger
