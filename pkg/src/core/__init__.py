"""Core error types shared by every package."""

from .exceptions import (
    NewtonStrataError,
    GroupDatumError,
    GroupMismatchError,
    LatticeConstraintError,
    PreconditionError,
    EnumerationError,
    VerificationError,
    ParseError,
)

__all__ = [
    "NewtonStrataError",
    "GroupDatumError",
    "GroupMismatchError",
    "LatticeConstraintError",
    "PreconditionError",
    "EnumerationError",
    "VerificationError",
    "ParseError",
]
