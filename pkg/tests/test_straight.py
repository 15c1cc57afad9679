"""
Tests for fundamental and sigma-straight elements

Run with: pytest tests/test_straight.py -v
"""

import random
from fractions import Fraction

import pytest

from src.core.exceptions import PreconditionError
from src.groups.root_datum import build_group
from src.affine.affine_weyl import (
    from_weyl,
    identity,
    is_sigma_straight,
    kottwitz_point,
    length,
    random_element,
    tau_mu,
    translation,
)
from src.affine.straight import (
    fundamental_parabolic,
    fundamental_representative,
    is_fundamental,
    minimal_eo_strata,
    semistandard_parabolics,
    straight_power_identity,
)
from src.newton.kottwitz_set import enumerate_BGmu

F = Fraction


class TestFundamental:
    """Test the fundamental-element criterion."""

    def test_identity(self):
        """The identity is fundamental for P = G."""
        G = build_group("gl", 2, 1)
        assert is_fundamental(identity(G))
        assert len(fundamental_parabolic(identity(G)).J) == 1

    def test_translation(self):
        """p^(1,0) is fundamental for the Borel."""
        G = build_group("gl", 2, 1)
        P = fundamental_parabolic(translation(G, (1, 0)))
        assert P is not None
        assert P.J == frozenset()

    def test_parabolic_count(self):
        """GL_3 has 1 + 3 + 3 + 6 distinct semistandard parabolics."""
        assert len(semistandard_parabolics(build_group("gl", 3, 1))) == 13

    @pytest.mark.parametrize("kind,n,d", [("gl", 3, 1), ("gsp", 4, 1), ("gl", 2, 2)])
    def test_fundamental_implies_straight(self, kind, n, d):
        """Fundamental elements are sigma-straight, and straight ones satisfy the power identity."""
        G = build_group(kind, n, d)
        rng = random.Random(17)
        for _ in range(40):
            x = random_element(G, rng, box=1)
            if is_fundamental(x):
                assert is_sigma_straight(x)
            if is_sigma_straight(x):
                assert straight_power_identity(x, 3)

    def test_power_identity_fails_off_straight(self):
        """A simple reflection is not straight: l(s sigma(s)) = 0."""
        G = build_group("gl", 2, 1)
        assert straight_power_identity(translation(G, (1, 0)), 4)
        assert not straight_power_identity(from_weyl(G, (1, 0)), 1)


class TestMinimalStrata:
    """Test fundamental representatives and minimal EO strata."""

    def test_ordinary_representative(self):
        """The ordinary class of GL_2 is represented by p^(0,1)."""
        G = build_group("gl", 2, 1)
        kappa = kottwitz_point(translation(G, (1, 0)))
        x = fundamental_representative(G, (1, 0), (1, 0), kappa)
        assert x.translation == (0, 1)
        assert x.finite == (0, 1)
        assert length(x) == 1

    def test_basic_representative(self):
        """The basic class of GL_2 is represented by tau_mu."""
        G = build_group("gl", 2, 1)
        kappa = kottwitz_point(translation(G, (1, 0)))
        x = fundamental_representative(G, (1, 0), (F(1, 2), F(1, 2)), kappa)
        assert x == tau_mu(G, (1, 0)).element

    @pytest.mark.parametrize("kind,n,d,mu", [
        ("gl", 2, 1, (1, 0)), ("gl", 3, 1, (1, 0, 0)), ("gsp", 4, 1, (1, 1, 0, 0)),
    ])
    def test_minimal_strata_match_central_leaves(self, kind, n, d, mu):
        """The minimal EO stratum has the central leaf dimension."""
        G = build_group(kind, n, d)
        rows = minimal_eo_strata(G, mu, enumerate_BGmu(G, mu))
        assert all(row.passed for row in rows)

    def test_minimal_strata_gl2_lengths(self):
        """GL_2: the ordinary stratum has length 1, the basic one 0."""
        G = build_group("gl", 2, 1)
        rows = minimal_eo_strata(G, (1, 0), enumerate_BGmu(G, (1, 0)))
        assert [row.eo_length for row in rows] == [1, 0]

    def test_requires_minuscule(self):
        """Non-minuscule mu is rejected."""
        with pytest.raises(PreconditionError):
            minimal_eo_strata(build_group("gl", 2, 1), (2, 0), [])
