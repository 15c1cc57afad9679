"""Exact integer and rational linear algebra."""

from .exact import (
    Rational,
    SmithForm,
    AbelianPresentation,
    LinearSolution,
    int_matrix,
    identity_matrix,
    exgcd,
    smith_normal_form,
    integer_kernel_basis,
    quotient_presentation,
    solve_rational,
    solve_integer,
    rational_inverse,
    left_inverse,
    apply_rows,
    dot,
)

__all__ = [
    "Rational",
    "SmithForm",
    "AbelianPresentation",
    "LinearSolution",
    "int_matrix",
    "identity_matrix",
    "exgcd",
    "smith_normal_form",
    "integer_kernel_basis",
    "quotient_presentation",
    "solve_rational",
    "solve_integer",
    "rational_inverse",
    "left_inverse",
    "apply_rows",
    "dot",
]
