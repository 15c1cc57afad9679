"""
Helper Utilities for Newton Strata
==================================
Exact-number JSON encoding, file I/O and a timing decorator.
"""

import json
import time
from fractions import Fraction
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar
from loguru import logger

T = TypeVar('T')


def format_rational(value: Fraction | int) -> str:
    """
    Format an exact rational as "p/q" (or "p" when integral).

    Example:
        >>> format_rational(Fraction(3, 2))
        '3/2'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational."""
    return Fraction(text.strip())


def to_json_ready(data: Any) -> Any:
    """
    Recursively convert exact numbers to strings for JSON.

    Fractions and ints become "p/q" / "p" strings; tuples become lists;
    booleans and None pass through unchanged.

    Example:
        >>> to_json_ready({"nu": (Fraction(1, 2), 0)})
        {'nu': ['1/2', '0']}
    """
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, (Fraction, int)):
        return format_rational(data)
    if isinstance(data, dict):
        return {str(k): to_json_ready(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_json_ready(v) for v in data]
    return data


def from_json_ready(data: Any, numeric_keys: frozenset[str] = frozenset()) -> Any:
    """
    Undo to_json_ready for the fields named in numeric_keys.

    Strings under a numeric key (at any depth inside that key's value) are
    parsed back into Fractions; lists become tuples there.

    Args:
        data: Parsed JSON value
        numeric_keys: Dictionary keys whose values hold encoded numbers

    Returns:
        Data with exact numbers restored
    """
    def restore(value: Any) -> Any:
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, list):
            return tuple(restore(v) for v in value)
        if isinstance(value, dict):
            return {k: restore(v) for k, v in value.items()}
        return value

    if isinstance(data, dict):
        return {
            k: restore(v) if k in numeric_keys else from_json_ready(v, numeric_keys)
            for k, v in data.items()
        }
    if isinstance(data, list):
        return [from_json_ready(v, numeric_keys) for v in data]
    return data


def save_json(data: Any, file_path: str | Path, indent: int = 2) -> None:
    """
    Save data to a JSON file, encoding exact numbers as strings.

    Args:
        data: Data to save
        file_path: Path to output file
        indent: Indentation level for pretty printing

    Example:
        >>> save_json({"defect": 1}, "report.json")
    """
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)

    with open(file_path, 'w', encoding='utf-8') as f:
        json.dump(to_json_ready(data), f, indent=indent, ensure_ascii=False)

    logger.debug(f"Saved JSON to {file_path}")


def load_json(file_path: str | Path, default: Optional[Any] = None) -> Any:
    """
    Load data from a JSON file.

    Args:
        file_path: Path to input file
        default: Default value if file doesn't exist or can't be parsed

    Returns:
        Loaded data or default value
    """
    file_path = Path(file_path)

    if not file_path.exists():
        logger.debug(f"File not found: {file_path}, returning default")
        return default

    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        logger.debug(f"Loaded JSON from {file_path}")
        return data
    except json.JSONDecodeError as e:
        logger.error(f"Failed to parse JSON from {file_path}: {e}")
        return default


def log_duration(label: Optional[str] = None) -> Callable:
    """
    Decorator that logs the wall-clock duration of a call at DEBUG level.

    Args:
        label: Name to log (defaults to the function name)

    Example:
        >>> @log_duration("bgmu")
        ... def run():
        ...     ...
    """
    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        name = label or func.__name__

        @wraps(func)
        def wrapper(*args, **kwargs) -> T:
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - start
                logger.debug(f"{name} finished in {elapsed:.3f}s")

        return wrapper
    return decorator
