"""
Tests for superbasic EL-charts

Run with: pytest tests/test_el_charts.py -v
"""

import pytest

from src.core.exceptions import PreconditionError
from src.newton.sigma_class import classify, is_basic, is_superbasic
from src.el_charts.charts import (
    ELChart,
    ELChartParams,
    admissible_params,
    enumerate_charts,
    floor_formula_dim,
    hodge_point,
    minuscule_hodge_point,
    superbasic_element,
    superbasic_rz_dim,
    sweep,
    to_lower_convention,
    to_upper_convention,
    v_count,
    validate,
)


@pytest.fixture
def height_two():
    return ELChartParams(1, 2, (1,))


class TestParams:
    """Test the EL datum."""

    def test_gcd_condition(self):
        """m and h must be coprime."""
        with pytest.raises(PreconditionError):
            ELChartParams(1, 4, (2,))

    def test_m_seq_length(self):
        """One m_tau per slot."""
        with pytest.raises(PreconditionError):
            ELChartParams(2, 3, (1,))

    def test_single_spreads(self):
        """m = 3 over two slots gives (2, 1)."""
        params = ELChartParams.single(2, 5, 3)
        assert params.m_seq == (2, 1)
        assert params.m == 3

    def test_f(self):
        """f moves to the next copy and adds its m."""
        params = ELChartParams(2, 5, (1, 2))
        assert params.m == 3
        assert params.f(0, 4) == (1, 6)
        assert params.f(1, 4) == (0, 5)


class TestValidate:
    """Test chart validation."""

    def test_height_two_chart(self, height_two):
        """B = {0, 1} with 1 in B- is the unique normalized chart."""
        chart = ELChart(height_two, 0, (0, 1))
        result = validate(chart)
        assert result.valid
        assert result.normalized
        assert result.diagnostics == []
        assert chart.B_minus == {(0, 1)}
        assert chart.contains(0, 5)
        assert not chart.contains(0, -1)

    def test_translate_not_normalized(self, height_two):
        """Translation keeps validity but loses the normalization."""
        result = validate(ELChart(height_two, 0, (0, 1)).translate(1))
        assert result.valid
        assert not result.normalized

    def test_open_cycle(self, height_two):
        """Two B- flags in a row do not close up."""
        result = validate(ELChart(height_two, 0, (1, 1)))
        assert not result.valid
        assert any(d.startswith("cycle") for d in result.diagnostics)

    def test_bad_flags(self, height_two):
        """The flag vector needs d*h entries."""
        result = validate(ELChart(height_two, 0, (0,)))
        assert not result.valid
        assert result.diagnostics == ["eps: needs d*h flags in {0, 1}"]


class TestHodgePoint:
    """Test Hodge points and their conventions."""

    def test_chart_hodge_point(self, height_two):
        """The height two chart has mu = (0, 1) in the lower convention."""
        chart = ELChart(height_two, 0, (0, 1))
        assert hodge_point(chart) == (0, 1)
        assert minuscule_hodge_point(height_two) == (0, 1)

    def test_conventions(self):
        """Each block of h is reversed."""
        assert to_upper_convention((0, 1, 0, 0), 2) == (1, 0, 0, 0)
        assert to_lower_convention((1, 0, 0, 0), 2) == (0, 1, 0, 0)

    def test_mismatched_mu(self, height_two):
        """A Hodge point with the wrong number of ones is refused."""
        with pytest.raises(PreconditionError):
            enumerate_charts(height_two, (1, 1))
        with pytest.raises(PreconditionError):
            enumerate_charts(height_two, (1, 0))


class TestDimensions:
    """Test the chart maximum against the floor formula."""

    def test_height_two(self, height_two):
        """One chart without pairs."""
        charts = enumerate_charts(height_two)
        assert len(charts) == 1
        assert v_count(charts[0]) == 0
        assert superbasic_rz_dim(height_two, (0, 1)) == 0

    @pytest.mark.parametrize("d,h,m_seq,expected", [
        (1, 3, (1,), 0),
        (1, 3, (2,), 0),
        (1, 5, (2,), 1),
        (2, 2, (1, 0), 0),
    ])
    def test_known_maxima(self, d, h, m_seq, expected):
        """Chart maximum and floor formula on small data."""
        params = ELChartParams(d, h, m_seq)
        assert floor_formula_dim(params) == expected
        assert superbasic_rz_dim(params) == expected

    def test_charts_are_normalized(self):
        """Every enumerated chart passes validation."""
        params = ELChartParams(1, 5, (2,))
        charts = enumerate_charts(params)
        assert charts
        assert all(validate(c).normalized for c in charts)
        assert all(hodge_point(c) == minuscule_hodge_point(params) for c in charts)

    def test_sweep(self):
        """Three admissible data up to h = 3, all in agreement."""
        assert len(list(admissible_params(3, 1))) == 3
        frame = sweep(3, 1)
        assert list(frame["h"]) == [2, 3, 3]
        assert frame["agrees"].all()


class TestSuperbasicElement:
    """Test the group element behind an EL datum."""

    @pytest.mark.parametrize("d,h,m_seq", [(1, 2, (1,)), (1, 5, (2,)), (2, 2, (1, 0))])
    def test_superbasic_class(self, d, h, m_seq):
        """The element is superbasic with constant slope m / (d h)."""
        params = ELChartParams(d, h, m_seq)
        c = classify(superbasic_element(params))
        assert c.nu == tuple([params.slope] * (d * h))
        assert is_basic(c)
        assert is_superbasic(c)
