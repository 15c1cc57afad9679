"""Command-line front-end: literal parsing, rendering and subcommands."""

from .main import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, build_parser, main
from .parsing import parse_element, parse_group, parse_rational_vector, parse_vector

__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VERIFICATION",
    "build_parser",
    "main",
    "parse_element",
    "parse_group",
    "parse_rational_vector",
    "parse_vector",
]
