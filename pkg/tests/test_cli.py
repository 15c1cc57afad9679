"""
Tests for the command line and its literal parsers

Run with: pytest tests/test_cli.py -v
"""

import json
from fractions import Fraction

import pytest

from src.core.exceptions import ParseError
from src.groups.root_datum import build_group
from src.cli.main import EXIT_OK, EXIT_USAGE, main
from src.cli.parsing import parse_element, parse_group, parse_rational_vector, parse_vector
from src.dimensions.formulas import bgmu_report


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestParsing:
    """Test the literal parsers."""

    def test_group_defaults(self):
        """d defaults to 1."""
        G = parse_group("gl(n=3)")
        assert (G.n, G.d) == (3, 1)
        assert parse_group("gsp(n=4, d=1)") == build_group("gsp", 4, 1)

    @pytest.mark.parametrize("text,position", [
        ("gx(n=2)", 0),
        ("gl(n=2", 6),
        ("gl(n=2,k=1)", 7),
        ("gl(n=2)x", 7),
    ])
    def test_group_errors(self, text, position):
        """Errors carry the offending position."""
        with pytest.raises(ParseError) as info:
            parse_group(text)
        assert info.value.position == position

    def test_vectors(self):
        """Integers, rationals and the slot separator."""
        assert parse_vector("1,0;0,0") == (1, 0, 0, 0)
        assert parse_rational_vector("1/2, 1/2") == (Fraction(1, 2), Fraction(1, 2))
        with pytest.raises(ParseError):
            parse_vector("1,a")
        with pytest.raises(ParseError):
            parse_rational_vector("1/0")

    def test_element(self):
        """A word in simple reflections."""
        G = build_group("gl", 2, 1)
        x = parse_element(G, "1,0|s1")
        assert x.translation == (1, 0)
        assert x.finite == (1, 0)
        assert parse_element(G, "0,0|id").finite == (0, 1)

    def test_element_errors(self):
        """Missing bar, wrong rank and unknown generators."""
        G = build_group("gl", 2, 2)
        with pytest.raises(ParseError):
            parse_element(G, "1,0,0,0")
        with pytest.raises(ParseError):
            parse_element(G, "1,0|id")
        with pytest.raises(ParseError):
            parse_element(G, "1,0,0,0|s1")
        with pytest.raises(ParseError):
            parse_element(G, "1,0,0,0|t2:s1")


class TestCommands:
    """Test each subcommand end to end."""

    def test_describe(self, capsys):
        """The root datum summary lists pi_1."""
        code, out = run(capsys, "describe", "gl(n=2)", "--format", "json")
        assert code == EXIT_OK
        info = json.loads(out)
        assert info["pi1"] == "Z^1"
        assert info["rho"] == ["1/2", "-1/2"]

    def test_unsupported_group(self, capsys):
        """A well-formed but unsupported group is a usage error."""
        code, _ = run(capsys, "describe", "gu(n=3,d=1)")
        assert code == EXIT_USAGE

    def test_bgmu_json(self, capsys):
        """Three classes for the Siegel threefold, basic one last."""
        code, out = run(capsys, "bgmu", "gsp(n=4)", "--mu", "1,1,0,0", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["classes"]) == 3
        assert payload["classes"][-1]["nu"] == ["1/2"] * 4
        assert payload["classes"][-1]["dim_rz"] == "1"
        assert payload["edges"] == [["1", "0"], ["2", "1"]]

    def test_bgmu_table(self, capsys):
        """The default table shows the dimension columns."""
        code, out = run(capsys, "bgmu", "gl(n=2)", "--mu", "1,0")
        assert code == EXIT_OK
        assert "dim_newton" in out
        assert "(1/2, 1/2)" in out

    def test_bgmu_dot(self, capsys):
        """Hasse diagram in DOT."""
        code, out = run(capsys, "bgmu", "gl(n=2)", "--mu", "1,0", "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith("digraph")
        assert "1 -> 0;" in out

    @pytest.mark.parametrize("group,mu,kind,n,d", [
        ("gl(n=2,d=2)", "1,0,0,0", "gl", 2, 2),
        ("gsp(n=4)", "1,1,0,0", "gsp", 4, 1),
    ])
    def test_bgmu_json_and_dot_agree(self, capsys, group, mu, kind, n, d):
        """JSON and DOT carry the same classes and Hasse edges as the report."""
        report = bgmu_report(build_group(kind, n, d), parse_vector(mu))
        code, out = run(capsys, "bgmu", group, "--mu", mu, "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        nus = [tuple(Fraction(v) for v in c["nu"]) for c in payload["classes"]]
        assert nus == [row.sigma_class.nu for row in report.rows]
        assert [tuple(int(v) for v in e) for e in payload["edges"]] == report.edges

        code, out = run(capsys, "bgmu", group, "--mu", mu, "--format", "dot")
        assert code == EXIT_OK
        arrows = [line.strip().rstrip(";").split(" -> ") for line in out.splitlines() if " -> " in line]
        assert [(int(i), int(j)) for i, j in arrows] == report.edges
        assert out.count("[label=") == len(report.rows)

    def test_bgmu_not_dominant(self, capsys):
        """A non-dominant mu is rejected."""
        code, _ = run(capsys, "bgmu", "gl(n=2)", "--mu", "0,1")
        assert code == EXIT_USAGE

    def test_eo(self, capsys):
        """p^(1,0) truncates to the simple reflection."""
        code, out = run(capsys, "eo", "gl(n=2)", "--element", "1,0|id", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["w"] == ["1", "0"]
        assert payload["eo_dimension"] == "1"
        assert payload["sigma_straight"] is True

    def test_rzdim_by_nu(self, capsys):
        """The supersingular RZ space of GL2 is zero-dimensional."""
        code, out = run(capsys, "rzdim", "gl(n=2)", "--mu", "1,0", "--nu", "1/2,1/2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["dim_rz"] == "0"
        assert payload["superbasic"] is True

    def test_rzdim_levi_reduction(self, capsys):
        """Non-superbasic Res GL classes carry the reduction table."""
        code, out = run(capsys, "rzdim", "gl(n=3)", "--mu", "1,1,0", "--nu", "1,1/2,1/2", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["levi_reduction"]["passed"] is True

    def test_rzdim_bad_index(self, capsys):
        """Row indices outside the listing are refused."""
        code, _ = run(capsys, "rzdim", "gl(n=2)", "--mu", "1,0", "--class-index", "5")
        assert code == EXIT_USAGE

    def test_elchart(self, capsys):
        """h = 5, m = 2 has a one-dimensional RZ space."""
        code, out = run(capsys, "elchart", "--h", "5", "--m", "2", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["max_v"] == "1"
        assert payload["floor_formula"] == "1"

    def test_verify(self, capsys):
        """Every identity holds on B(GSp4, mu)."""
        code, out = run(capsys, "verify", "gsp(n=4)", "--mu", "1,1,0,0")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "all identities hold (3 classes)"

    def test_output_file(self, capsys, tmp_path):
        """--output writes the payload instead of printing it."""
        target = tmp_path / "gl2.json"
        code, out = run(capsys, "--output", str(target), "describe", "gl(n=2)", "--format", "json")
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text())["pi1_coinvariants"] == "Z^1"

    def test_usage_errors(self, capsys):
        """Missing subcommand or arguments exit with status 1."""
        assert main([]) == EXIT_USAGE
        assert main(["bgmu", "gl(n=2)"]) == EXIT_USAGE
        assert main(["bgmu", "gl(n=2", "--mu", "1,0"]) == EXIT_USAGE
