"""
Tests for sigma-conjugacy classes, B(G, mu) and the defect

Run with: pytest tests/test_newton.py -v
"""

from fractions import Fraction

import pytest

from src.core.exceptions import GroupMismatchError, PreconditionError
from src.groups.root_datum import build_group
from src.affine.affine_weyl import translation
from src.newton.sigma_class import classify, is_basic, is_superbasic, leq
from src.newton.kottwitz_set import BGmuPoset, class_of_mu, enumerate_BGmu, hasse_edges
from src.newton.defect import (
    chain_length,
    check_defect,
    defect,
    defect_oracle_resgl,
    rank_identity,
)

HALF = Fraction(1, 2)


@pytest.fixture
def gl2():
    return build_group("gl", 2, 1)


@pytest.fixture
def gsp4():
    return build_group("gsp", 4, 1)


class TestClassify:
    """Test the invariants of a single class."""

    def test_translation_newton_point(self, gl2):
        """p^(1,0) is mu-ordinary with nu = (1, 0)."""
        c = classify(translation(gl2, (1, 0)))
        assert c.nu == (1, 0)
        assert not is_basic(c)

    def test_class_of_mu_is_maximum(self, gl2):
        """class_of_mu agrees with classifying the translation."""
        assert class_of_mu(gl2, (1, 0)) == classify(translation(gl2, (1, 0)))

    def test_non_dominant_mu_rejected(self, gl2):
        """B(G, mu) needs mu dominant."""
        with pytest.raises(PreconditionError):
            enumerate_BGmu(gl2, (0, 1))


class TestEnumeration:
    """Test B(G, mu) for small groups."""

    def test_gl2(self, gl2):
        """B(GL2, (1, 0)) is ordinary over supersingular."""
        classes = enumerate_BGmu(gl2, (1, 0))
        assert [c.nu for c in classes] == [(1, 0), (HALF, HALF)]
        assert [defect(c) for c in classes] == [0, 1]
        assert len({c.kappa for c in classes}) == 1

    def test_gsp4(self, gsp4):
        """The Siegel case has ordinary, p-rank one and supersingular classes."""
        classes = enumerate_BGmu(gsp4, (1, 1, 0, 0))
        assert len(classes) == 3
        assert classes[0].nu == (1, 1, 0, 0)
        assert classes[1].nu == (1, HALF, HALF, 0)
        assert classes[-1].nu == (HALF, HALF, HALF, HALF)
        assert [defect(c) for c in classes] == [0, 1, 1]

    def test_window_stability(self, gsp4):
        """The class set does not change when the lift window grows."""
        narrow = enumerate_BGmu(gsp4, (1, 1, 0, 0), window_pad=1, check_stability=True)
        wide = enumerate_BGmu(gsp4, (1, 1, 0, 0), window_pad=4, check_stability=False)
        assert [c.key for c in narrow] == [c.key for c in wide]

    def test_gl5_basic_defect(self):
        """The basic class of slope 2/5 has J_b of rank one."""
        G = build_group("gl", 5, 1)
        basic = enumerate_BGmu(G, (1, 1, 0, 0, 0))[-1]
        assert basic.nu == tuple([Fraction(2, 5)] * 5)
        assert check_defect(basic) == 4
        assert defect_oracle_resgl(basic) == 4
        assert rank_identity(basic) == 4

    def test_slope_oracle_needs_resgl(self, gsp4):
        """The slope oracle only applies to Res GL."""
        basic = enumerate_BGmu(gsp4, (1, 1, 0, 0))[-1]
        with pytest.raises(PreconditionError):
            defect_oracle_resgl(basic)


class TestBasicAndSuperbasic:
    """Test the basic and superbasic predicates."""

    def test_gl2_supersingular(self, gl2):
        """Slope 1/2 on GL2 is superbasic."""
        basic = enumerate_BGmu(gl2, (1, 0))[-1]
        assert is_basic(basic)
        assert is_superbasic(basic)

    def test_gl4_half_not_superbasic(self):
        """Slope 1/2 on GL4 lives in GL2 x GL2."""
        G = build_group("gl", 4, 1)
        basic = enumerate_BGmu(G, (1, 1, 0, 0))[-1]
        assert is_basic(basic)
        assert not is_superbasic(basic)

    def test_ordinary_not_basic(self, gl2):
        """A class with distinct slopes is not basic."""
        top = enumerate_BGmu(gl2, (1, 0))[0]
        assert not is_basic(top)
        assert not is_superbasic(top)


class TestOrder:
    """Test the partial order, chains and the Hasse diagram."""

    def test_leq(self, gl2):
        """The basic class lies below the ordinary one."""
        top, basic = enumerate_BGmu(gl2, (1, 0))
        assert leq(basic, top)
        assert not leq(top, basic)

    def test_leq_across_groups(self, gl2, gsp4):
        """Classes of different groups are not comparable."""
        a = enumerate_BGmu(gl2, (1, 0))[0]
        b = enumerate_BGmu(gsp4, (1, 1, 0, 0))[0]
        with pytest.raises(GroupMismatchError):
            leq(a, b)

    def test_gsp4_chain(self, gsp4):
        """Three classes in a line: two covering relations."""
        classes = enumerate_BGmu(gsp4, (1, 1, 0, 0))
        poset = BGmuPoset(classes)
        assert poset.basic_index() == 2
        assert hasse_edges(classes) == [(1, 0), (2, 1)]
        assert poset.longest_chain_length(2, 0) == 2
        assert chain_length(classes[2], classes[0]) == 2
        assert chain_length(classes[1], classes[0]) == 1

    def test_chain_needs_order(self, gl2):
        """chain_length refuses incomparable pairs."""
        top, basic = enumerate_BGmu(gl2, (1, 0))
        with pytest.raises(PreconditionError):
            chain_length(top, basic)

    def test_from_mu(self, gl2):
        """The poset constructor enumerates on its own."""
        poset = BGmuPoset.from_mu(gl2, (1, 0))
        assert len(poset) == 2
        assert poset.interval(1, 0) == [0, 1]
