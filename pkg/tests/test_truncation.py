"""
Tests for the Ekedahl-Oort truncation

Run with: pytest tests/test_truncation.py -v
"""

import random

import pytest

from src.groups.root_datum import build_group
from src.groups.weyl import length_finite
from src.affine.affine_weyl import length, random_element, tau_mu, translation
from src.affine.truncation import (
    eo_stratum_dimension,
    eo_truncation,
    is_in_minimal_coset,
    replay_certificate,
)


class TestKnownTruncations:
    """Test hand-computed truncation types."""

    def test_ordinary_gl2(self):
        """p^(1,0) has type (s, (1,0)) and an EO stratum of dimension 1."""
        G = build_group("gl", 2, 1)
        b = translation(G, (1, 0))
        result = eo_truncation(b)
        assert result.w == (1, 0)
        assert result.mu == (1, 0)
        assert eo_stratum_dimension(result) == 1
        assert replay_certificate(b, result) == result.endpoint()

    def test_tau_mu_is_superspecial(self):
        """tau_mu has type (1, mu)."""
        G = build_group("gl", 2, 1)
        result = eo_truncation(tau_mu(G, (1, 0)).element)
        assert result.w == (0, 1)
        assert eo_stratum_dimension(result) == 0

    def test_element_of_type(self):
        """result.element() is w tau_mu."""
        G = build_group("gl", 2, 1)
        result = eo_truncation(translation(G, (1, 0)))
        assert result.element().translation == (1, 0)
        assert length(result.element()) == 1


class TestTruncationProperties:
    """Test termination, minimality, the length bound and idempotence on random elements."""

    @pytest.mark.parametrize("kind,n,d", [("gl", 3, 1), ("gsp", 4, 1), ("gl", 2, 2), ("gu", 2, 2)])
    def test_random_elements(self, kind, n, d):
        """Every random element truncates to a minimal w with l(b) >= l(w tau_mu)."""
        G = build_group(kind, n, d)
        rng = random.Random(20240611)
        for _ in range(40):
            b = random_element(G, rng, box=2)
            result = eo_truncation(b)
            assert result.iterations <= len(G.simple_roots) + 2
            assert is_in_minimal_coset(result)
            assert length(b) >= length(result.element())
            assert eo_truncation(result.element()).w == result.w
            assert replay_certificate(b, result) == result.endpoint()

    def test_dimension_is_finite_length(self):
        """The stratum dimension is l(w) in W."""
        G = build_group("gl", 3, 1)
        rng = random.Random(5)
        for _ in range(10):
            result = eo_truncation(random_element(G, rng))
            assert eo_stratum_dimension(result) == length_finite(G, result.w)
