"""
Tests for the verification sweep at its configured scale

Run with: pytest tests/test_verification_sweep.py -v
Skip with: pytest -m "not slow"
"""

import importlib.util
from pathlib import Path

import pytest

from src.config.settings import Settings

_SCRIPT = Path(__file__).resolve().parents[1] / "scripts" / "run_verification.py"


@pytest.fixture(scope="module")
def sweep_module():
    spec = importlib.util.spec_from_file_location("run_verification", _SCRIPT)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


@pytest.fixture
def default_settings(monkeypatch, tmp_path):
    for key in ("VERIFY_SAMPLE_SIZE", "VERIFY_SEED", "ORACLE_MAX_LENGTH", "STRAIGHT_MAX_POWER"):
        monkeypatch.delenv(key, raising=False)
    return Settings(env_file=str(tmp_path / "missing.env"))


@pytest.mark.slow
class TestSweepSections:
    """Run the sweep sections with the default settings."""

    def test_defaults_are_acceptance_scale(self, default_settings):
        """500 samples and BFS radius 8."""
        assert default_settings.sample_size == 500
        assert default_settings.oracle_max_length == 8

    def test_length_oracle(self, sweep_module, default_settings):
        """The closed length formula matches BFS up to length 8."""
        frame = sweep_module.run_length_oracle(
            {"groups": ["gl(n=2,d=1)", "gl(n=3,d=1)", "gsp(n=4,d=1)"]},
            default_settings.oracle_max_length,
        )
        assert len(frame) == 3
        assert (frame["checked"] > 0).all()
        assert frame["failures"].map(len).sum() == 0

    def test_truncation(self, sweep_module, default_settings):
        """500 random elements per group truncate without a failed property."""
        frame = sweep_module.run_truncation(
            {"groups": ["gl(n=3,d=1)", "gsp(n=4,d=1)", "gl(n=2,d=2)"], "box": 2},
            default_settings.sample_size,
            default_settings.seed,
            default_settings.straight_max_power,
        )
        assert (frame["checked"] == 500).all()
        assert frame["failures"].map(len).sum() == 0

    def test_identity_cases(self, sweep_module):
        """Identities, Levi reduction and minimal EO strata on small cases."""
        for group, mu in [("gl(n=3,d=1)", (1, 1, 0)), ("gsp(n=4,d=1)", (1, 1, 0, 0))]:
            row = sweep_module.check_case(group, mu)
            assert row["failures"] == [], row
