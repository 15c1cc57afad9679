"""
Exact Integer and Rational Linear Algebra
=========================================
Smith normal form over numpy object arrays, presentations of finitely
generated abelian groups, and exact rational solves backed by sympy.

Every quantity stays exact: integers are Python ints (arbitrary precision)
held in object-dtype arrays, rationals are fractions.Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
import sympy
from loguru import logger

Rational = Fraction
IntMatrix = np.ndarray


def int_matrix(rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> IntMatrix:
    """
    Build an exact integer matrix (object dtype).

    Args:
        rows: Row vectors
        cols: Column count, required when rows is empty

    Returns:
        2-D numpy array of Python ints
    """
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix rows must all have the same length")
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = int(value)
    return out


def identity_matrix(size: int) -> IntMatrix:
    """Exact identity matrix."""
    out = np.zeros((size, size), dtype=object)
    for i in range(size):
        out[i, i] = 1
    return out


def exgcd(a: int, b: int) -> IntMatrix:
    """
    Extended GCD as a unimodular 2x2 matrix.

    Returns:
        A 2x2 integer matrix E of determinant 1 with E @ [a, b] = [g, 0],
        g = gcd(a, b) >= 0. When a divides b, E[0, 1] == 0.
    """
    a, b = int(a), int(b)
    if b == 0:
        sign = -1 if a < 0 else 1
        return int_matrix([[sign, 0], [0, sign]])
    if a != 0 and b % a == 0:
        if a < 0:
            return int_matrix([[-1, 0], [b // a, -1]])
        return int_matrix([[1, 0], [-(b // a), 1]])

    # Euclid on (a, b) tracking the Bezout coefficients
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g, x, y = old_r, old_s, old_t
    if g < 0:
        g, x, y = -g, -x, -y
    return int_matrix([[x, y], [-b // g, a // g]])


def inv_2x2_det1(E: IntMatrix) -> IntMatrix:
    """Matrix inverse of a 2x2 matrix with determinant 1."""
    assert E[0, 0] * E[1, 1] - E[0, 1] * E[1, 0] == 1
    return int_matrix([[E[1, 1], -E[0, 1]], [-E[1, 0], E[0, 0]]])


@dataclass(frozen=True)
class SmithForm:
    """
    Result of smith_normal_form: U @ M @ V == S.

    Attributes:
        S: Diagonal matrix, nonnegative entries, each dividing the next
        U: Unimodular row transform
        V: Unimodular column transform
        V_inv: Exact inverse of V
    """
    S: IntMatrix
    U: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        """Diagonal entries of S."""
        return tuple(int(self.S[i, i]) for i in range(min(self.S.shape)))

    @property
    def rank(self) -> int:
        """Number of nonzero invariant factors."""
        return sum(1 for v in self.diagonal if v != 0)


def smith_normal_form(M: Sequence[Sequence[int]] | IntMatrix) -> SmithForm:
    """
    Smith normal form by 2x2 unimodular row and column operations.

    Each step moves the entry of least absolute value in the remaining block
    to the pivot, clears its row and column with exgcd operations, and folds
    any entry not divisible by the pivot back into the pivot row.

    Args:
        M: Integer matrix

    Returns:
        SmithForm with U @ M @ V == S

    Example:
        >>> form = smith_normal_form([[2, 4], [6, 8]])
        >>> form.diagonal
        (2, 4)
    """
    A = np.array(M, dtype=object) if not isinstance(M, np.ndarray) else M.astype(object)
    if A.ndim != 2:
        A = A.reshape((len(A), -1)) if len(A) else np.zeros((0, 0), dtype=object)
    rows, cols = A.shape
    D = A.copy()
    U = identity_matrix(rows)
    V = identity_matrix(cols)
    V_inv = identity_matrix(cols)

    def row_op(i: int, j: int, E: IntMatrix) -> None:
        D[[i, j]] = E @ D[[i, j]]
        U[[i, j]] = E @ U[[i, j]]

    def col_op(i: int, j: int, E: IntMatrix) -> None:
        F = E.T
        D[:, [i, j]] = D[:, [i, j]] @ F
        V[:, [i, j]] = V[:, [i, j]] @ F
        V_inv[[i, j]] = inv_2x2_det1(F) @ V_inv[[i, j]]

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            D[[i, j]] = D[[j, i]]
            U[[i, j]] = U[[j, i]]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            D[:, [i, j]] = D[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            V_inv[[i, j]] = V_inv[[j, i]]

    for t in range(min(rows, cols)):
        candidates = [
            (abs(D[i, j]), i, j)
            for i in range(t, rows) for j in range(t, cols) if D[i, j] != 0
        ]
        if not candidates:
            break
        _, pi, pj = min(candidates)
        swap_rows(t, pi)
        swap_cols(t, pj)

        while True:
            for i in range(t + 1, rows):
                if D[i, t] != 0:
                    row_op(t, i, exgcd(D[t, t], D[i, t]))
            for j in range(t + 1, cols):
                if D[t, j] != 0:
                    col_op(t, j, exgcd(D[t, t], D[t, j]))
            if any(D[i, t] != 0 for i in range(t + 1, rows)):
                continue
            pivot = D[t, t]
            offender = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols)
                 if D[i, j] % pivot != 0),
                None,
            )
            if offender is None:
                break
            # pivot row += offending row, then clear again
            D[t] = D[t] + D[offender]
            U[t] = U[t] + U[offender]

        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]

    logger.debug(f"SNF of {rows}x{cols} matrix: diagonal {[D[i, i] for i in range(min(rows, cols))]}")
    return SmithForm(S=D, U=U, V=V, V_inv=V_inv)


def integer_kernel_basis(M: Sequence[Sequence[int]] | IntMatrix, cols: Optional[int] = None) -> list[tuple[int, ...]]:
    """
    Basis of the integer kernel {x in Z^cols : M x = 0}.

    Args:
        M: Integer matrix (may have zero rows)
        cols: Column count, required when M has no rows

    Returns:
        List of integer vectors forming a Z-basis of the kernel lattice
    """
    A = int_matrix(M, cols) if not isinstance(M, np.ndarray) else M
    if A.shape[0] == 0:
        n = A.shape[1]
        return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    form = smith_normal_form(A)
    r = form.rank
    return [tuple(int(v) for v in form.V[:, j]) for j in range(r, A.shape[1])]


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int], cols: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """
    One integer solution of A x = b, or None.

    Uses U A V = S: x = V y where S y = U b.

    Example:
        >>> solve_integer([[2, 4]], [6])
        (3, 0)
    """
    M = int_matrix(A, cols)
    rows, width = M.shape
    if rows == 0:
        return (0,) * width
    form = smith_normal_form(M)
    rhs = form.U @ np.array([int(v) for v in b], dtype=object)
    y = [0] * width
    for i in range(rows):
        s = int(form.S[i, i]) if i < min(rows, width) else 0
        value = int(rhs[i])
        if s == 0:
            if value != 0:
                return None
        elif value % s:
            return None
        else:
            y[i] = value // s
    x = form.V @ np.array(y, dtype=object)
    return tuple(int(v) for v in x)


@dataclass(frozen=True)
class AbelianPresentation:
    """
    Presentation of Z^ambient_rank / <relations>.

    Coordinates of a class are the torsion residues (in divisibility order)
    followed by the free coordinates.

    Attributes:
        ambient_rank: Rank of the ambient lattice
        free_rank: Rank of the free part
        torsion_orders: Invariant factors > 1, each dividing the next
        projection: Integer matrix V; x @ V gives raw coordinates
        lift_matrix: Exact inverse of V
        moduli: Per raw coordinate: 0 (free), 1 (trivial) or its torsion order
    """
    ambient_rank: int
    free_rank: int
    torsion_orders: tuple[int, ...]
    projection: IntMatrix
    lift_matrix: IntMatrix
    moduli: tuple[int, ...]

    def _raw(self, x: Sequence[int]) -> list[int]:
        if len(x) != self.ambient_rank:
            raise ValueError(f"expected a vector of length {self.ambient_rank}, got {len(x)}")
        row = np.array([int(v) for v in x], dtype=object)
        return [int(v) for v in row @ self.projection] if self.ambient_rank else []

    def project(self, x: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the class of x."""
        raw = self._raw(x)
        torsion = [raw[j] % m for j, m in enumerate(self.moduli) if m > 1]
        free = [raw[j] for j, m in enumerate(self.moduli) if m == 0]
        return tuple(torsion + free)

    def lift(self, coords: Sequence[int]) -> tuple[int, ...]:
        """An integer vector whose class has the given coordinates."""
        torsion_idx = [j for j, m in enumerate(self.moduli) if m > 1]
        free_idx = [j for j, m in enumerate(self.moduli) if m == 0]
        if len(coords) != len(torsion_idx) + len(free_idx):
            raise ValueError("coordinate vector has the wrong length")
        raw = [0] * self.ambient_rank
        for j, value in zip(torsion_idx + free_idx, coords):
            raw[j] = int(value)
        row = np.array(raw, dtype=object)
        return tuple(int(v) for v in row @ self.lift_matrix)

    def kills(self, x: Sequence[int]) -> bool:
        """True iff x lies in the relation subgroup."""
        return all(v == 0 for v in self.project(x))

    def describe(self) -> str:
        """Human-readable isomorphism type, e.g. 'Z^1 x Z/2'."""
        parts = [f"Z/{m}" for m in self.torsion_orders]
        if self.free_rank:
            parts.insert(0, f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"


def quotient_presentation(ambient_rank: int, relations: Sequence[Sequence[int]]) -> AbelianPresentation:
    """
    Present Z^ambient_rank modulo the span of the relation vectors.

    Args:
        ambient_rank: Rank of the ambient lattice
        relations: Integer vectors of length ambient_rank

    Returns:
        AbelianPresentation whose projection kills exactly the relation span

    Example:
        >>> quotient_presentation(2, [(1, -1)]).describe()
        'Z^1'
    """
    relations = [tuple(int(v) for v in r) for r in relations]
    if any(len(r) != ambient_rank for r in relations):
        raise ValueError(f"relations must have length {ambient_rank}")

    if relations:
        form = smith_normal_form(int_matrix(relations))
        diag = form.diagonal
        V, V_inv = form.V, form.V_inv
    else:
        diag = ()
        V = V_inv = identity_matrix(ambient_rank)

    moduli = tuple(diag[j] if j < len(diag) else 0 for j in range(ambient_rank))

    # orient each free coordinate so the first basis vector it sees maps positively
    V, V_inv = V.copy(), V_inv.copy()
    for j, m in enumerate(moduli):
        if m != 0:
            continue
        lead = next((V[i, j] for i in range(ambient_rank) if V[i, j] != 0), 0)
        if lead < 0:
            V[:, j] = -V[:, j]
            V_inv[j] = -V_inv[j]

    torsion = tuple(m for m in moduli if m > 1)
    free_rank = sum(1 for m in moduli if m == 0)
    return AbelianPresentation(
        ambient_rank=ambient_rank,
        free_rank=free_rank,
        torsion_orders=torsion,
        projection=V,
        lift_matrix=V_inv,
        moduli=moduli,
    )


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _to_sympy(A: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in A])


@dataclass(frozen=True)
class LinearSolution:
    """
    Solution set of A x = b: particular + span(kernel).

    Attributes:
        particular: One exact solution
        kernel: Basis of the homogeneous solution space
    """
    particular: tuple[Fraction, ...]
    kernel: tuple[tuple[Fraction, ...], ...]

    @property
    def is_unique(self) -> bool:
        """True when the kernel is trivial."""
        return not self.kernel


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[LinearSolution]:
    """
    Solve A x = b exactly over Q.

    Args:
        A: Rational matrix (rows)
        b: Right-hand side

    Returns:
        LinearSolution, or None when the system is inconsistent

    Example:
        >>> solve_rational([[2, -1], [-1, 2]], [1, 0]).particular
        (Fraction(2, 3), Fraction(1, 3))
    """
    rows = [list(r) for r in A]
    if len(rows) != len(b):
        raise ValueError("A and b have incompatible dimensions")
    width = len(rows[0]) if rows else 0
    if width == 0:
        return LinearSolution((), ()) if all(Fraction(v) == 0 for v in b) else None

    matrix = _to_sympy(rows)
    rhs = _to_sympy([[v] for v in b])
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None

    zero = {p: 0 for p in params}
    particular = tuple(_to_fraction(v) for v in solution.subs(zero))
    kernel = tuple(
        tuple(_to_fraction(v) for v in vec)
        for vec in matrix.nullspace()
    )
    return LinearSolution(particular=particular, kernel=kernel)


def rational_inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square nonsingular rational matrix."""
    inv = _to_sympy([list(r) for r in A]).inv()
    return [[_to_fraction(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def left_inverse(columns: Sequence[Sequence]) -> list[list[Fraction]]:
    """
    Rational left inverse of a matrix with independent columns.

    Args:
        columns: The column vectors c_1..c_r (each of length N)

    Returns:
        r x N matrix L with L @ [c_1 .. c_r] = identity
    """
    B = _to_sympy([list(c) for c in columns]).T
    L = (B.T * B).inv() * B.T
    return [[_to_fraction(L[i, j]) for j in range(L.cols)] for i in range(L.rows)]


def apply_rows(L: Sequence[Sequence[Fraction]], v: Sequence) -> tuple[Fraction, ...]:
    """Matrix-vector product L @ v with exact arithmetic."""
    return tuple(sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in L)


def dot(u: Sequence, v: Sequence) -> Fraction:
    """Exact dot product."""
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))
