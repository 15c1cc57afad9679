"""
Exception Hierarchy for Newton Strata
=====================================
All library errors derive from NewtonStrataError so callers (the CLI in
particular) can map them to exit codes in one place.
"""

from typing import Any, Optional


class NewtonStrataError(Exception):
    """Base class for every error raised by the library."""
    pass


class GroupDatumError(NewtonStrataError):
    """Raised when (kind, n, d) does not describe a supported group."""
    pass


class GroupMismatchError(NewtonStrataError):
    """Raised when objects from two different groups are combined."""
    pass


class LatticeConstraintError(NewtonStrataError):
    """Raised when a vector does not lie in the constrained lattice X_*(T)."""
    pass


class PreconditionError(NewtonStrataError):
    """Raised when an operation is called outside its domain."""
    pass


class EnumerationError(NewtonStrataError):
    """Raised when an exhaustive search produces an inconsistent result."""
    pass


class VerificationError(NewtonStrataError):
    """
    Raised when a closed formula disagrees with its independent oracle.

    Attributes:
        quantity: Name of the quantity that was checked
        expected: Oracle value
        actual: Closed-formula value
    """

    def __init__(
        self,
        message: str,
        quantity: Optional[str] = None,
        expected: Any = None,
        actual: Any = None
    ):
        super().__init__(message)
        self.quantity = quantity
        self.expected = expected
        self.actual = actual


class ParseError(NewtonStrataError):
    """
    Raised when a CLI literal cannot be parsed.

    Attributes:
        text: The offending input
        position: 0-based index of the first unexpected character
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} (at position {position} in {text!r})")
        self.text = text
        self.position = position
