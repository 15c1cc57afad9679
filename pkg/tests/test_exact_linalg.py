"""
Tests for exact integer and rational linear algebra

Run with: pytest tests/test_exact_linalg.py -v
"""

from fractions import Fraction

import numpy as np
import pytest

from src.linalg.exact import (
    dot,
    exgcd,
    int_matrix,
    integer_kernel_basis,
    left_inverse,
    quotient_presentation,
    rational_inverse,
    smith_normal_form,
    solve_integer,
    solve_rational,
)


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


class TestSmithNormalForm:
    """Test the Smith normal form and its transforms."""

    @pytest.mark.parametrize("M", [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[1, -1, 0], [0, 1, -1]],
        [[6], [4]],
        [[0, 0], [0, 0]],
    ])
    def test_transforms_reproduce_diagonal(self, M):
        """U @ M @ V equals S, with each invariant factor dividing the next."""
        form = smith_normal_form(M)
        product = form.U @ int_matrix(M) @ form.V
        assert np.array_equal(product, form.S)
        diag = [d for d in form.diagonal if d]
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
        assert all(d >= 0 for d in form.diagonal)

    def test_known_invariant_factors(self):
        """The classic 3x3 example has invariant factors 2, 6, 12."""
        form = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        assert form.diagonal == (2, 6, 12)
        assert form.rank == 3

    def test_v_inverse(self):
        """V_inv is the exact inverse of V."""
        form = smith_normal_form([[3, 5], [7, 11]])
        assert np.array_equal(form.V @ form.V_inv, np.eye(2, dtype=int).astype(object))

    def test_exgcd_is_unimodular(self):
        """The exgcd matrix sends (a, b) to (gcd, 0) with determinant 1."""
        E = exgcd(12, -18)
        g = E[0, 0] * 12 + E[0, 1] * -18
        assert abs(g) == 6
        assert E[1, 0] * 12 + E[1, 1] * -18 == 0
        assert E[0, 0] * E[1, 1] - E[0, 1] * E[1, 0] == 1


class TestIntegerSolves:
    """Test kernels and integer solutions."""

    def test_kernel_of_row(self):
        """The kernel of (1, 1, 1) has rank 2 and is annihilated by the row."""
        basis = integer_kernel_basis([[1, 1, 1]])
        assert len(basis) == 2
        assert all(sum(v) == 0 for v in basis)

    def test_kernel_without_rows(self):
        """No rows means the whole lattice."""
        assert integer_kernel_basis([], cols=2) == [(1, 0), (0, 1)]

    def test_solve_integer_solution(self):
        """A returned solution satisfies A x = b."""
        x = solve_integer([[2, 4]], [6])
        assert x is not None
        assert 2 * x[0] + 4 * x[1] == 6

    def test_solve_integer_none(self):
        """2x + 4y = 3 has no integer solution."""
        assert solve_integer([[2, 4]], [3]) is None


class TestPresentations:
    """Test abelian group presentations."""

    def test_gl_fundamental_group(self):
        """Z^2 / <(1, -1)> is Z."""
        pres = quotient_presentation(2, [(1, -1)])
        assert pres.describe() == "Z^1"
        assert pres.project((1, 0)) == pres.project((0, 1))
        assert pres.kills((1, -1))

    def test_torsion(self):
        """Z / <2> is Z/2."""
        pres = quotient_presentation(1, [(2,)])
        assert pres.torsion_orders == (2,)
        assert pres.describe() == "Z/2"
        assert pres.project((3,)) == (1,)

    def test_lift_projects_back(self):
        """lift followed by project is the identity on coordinates."""
        pres = quotient_presentation(3, [(1, -1, 0), (0, 2, -2)])
        for coords in [(0, 0), (1, 5), (1, -3)]:
            assert pres.project(pres.lift(coords)) == coords


class TestRationalSolves:
    """Test exact rational solving."""

    def test_unique_solution(self):
        """The A2 Cartan system has the expected exact solution."""
        sol = solve_rational([[2, -1], [-1, 2]], [1, 0])
        assert sol.particular == (Fraction(2, 3), Fraction(1, 3))
        assert sol.is_unique

    def test_inconsistent(self):
        """x = 1 and x = 2 together are inconsistent."""
        assert solve_rational([[1], [1]], [1, 2]) is None

    def test_underdetermined_kernel(self):
        """x + y = 1 has a one-dimensional kernel."""
        sol = solve_rational([[1, 1]], [1])
        assert len(sol.kernel) == 1
        assert sum(sol.particular) == 1

    def test_inverse(self):
        """rational_inverse inverts exactly."""
        A = [[2, 1], [1, 1]]
        assert _matmul(A, rational_inverse(A)) == [[1, 0], [0, 1]]

    def test_left_inverse(self):
        """The left inverse of independent columns recovers coordinates."""
        L = left_inverse([(1, -1, 0), (0, 1, -1)])
        v = (2, 1, -3)  # 2 * c1 + 3 * c2
        assert [dot(row, v) for row in L] == [2, 3]
