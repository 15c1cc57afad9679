"""
Tests for configuration and helper utilities

Run with: pytest tests/test_settings_and_helpers.py -v
"""

from fractions import Fraction

import pytest

from src.config.settings import Settings, SettingsError
from src.utils.helpers import (
    format_rational,
    from_json_ready,
    load_json,
    log_duration,
    save_json,
    to_json_ready,
)
from src.utils.logger import setup_logger

_ENV_KEYS = [
    "LOG_LEVEL", "LOG_FILE", "BGMU_WINDOW_PAD", "BGMU_CHECK_STABILITY", "VERIFY_SAMPLE_SIZE",
    "VERIFY_SEED", "ORACLE_MAX_LENGTH", "STRAIGHT_MAX_POWER", "OUTPUT_DIR",
]


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for key in _ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    return tmp_path / "missing.env"


class TestSettings:
    """Test suite for Settings class."""

    def test_defaults(self, clean_env):
        """An empty environment is a valid configuration."""
        settings = Settings(env_file=str(clean_env))
        assert settings.window_pad == 1
        assert settings.check_stability is True
        assert settings.oracle_max_length == 8
        assert settings.straight_max_power == 4
        assert settings.log_file is None
        assert all(settings.validate_all().values())

    def test_overrides(self, clean_env, monkeypatch):
        """Environment variables override the defaults."""
        monkeypatch.setenv("BGMU_WINDOW_PAD", "3")
        monkeypatch.setenv("BGMU_CHECK_STABILITY", "false")
        monkeypatch.setenv("LOG_LEVEL", "debug")
        settings = Settings(env_file=str(clean_env))
        assert settings.window_pad == 3
        assert settings.check_stability is False
        assert settings.log_level == "DEBUG"

    def test_non_integer(self, clean_env, monkeypatch):
        """Non-numeric integers fail at load time."""
        monkeypatch.setenv("VERIFY_SEED", "abc")
        with pytest.raises(SettingsError):
            Settings(env_file=str(clean_env))

    def test_out_of_range(self, clean_env, monkeypatch):
        """validate_all reports every bad value."""
        monkeypatch.setenv("BGMU_WINDOW_PAD", "-1")
        monkeypatch.setenv("ORACLE_MAX_LENGTH", "40")
        settings = Settings(env_file=str(clean_env))
        with pytest.raises(SettingsError) as info:
            settings.validate_all()
        assert "window_pad" in str(info.value)
        assert "oracle_max_length" in str(info.value)

    def test_output_dir(self, clean_env, monkeypatch, tmp_path):
        """Absolute output directories are created as given."""
        monkeypatch.setenv("OUTPUT_DIR", str(tmp_path / "reports"))
        out = Settings(env_file=str(clean_env)).get_output_dir()
        assert out == tmp_path / "reports"
        assert out.is_dir()


class TestHelpers:
    """Test suite for helper functions."""

    def test_format_rational(self):
        """Integral values drop the denominator."""
        assert format_rational(Fraction(3, 2)) == "3/2"
        assert format_rational(Fraction(-4, 2)) == "-2"
        assert format_rational(5) == "5"

    def test_json_ready(self):
        """Exact numbers become strings, booleans survive."""
        data = {"nu": (Fraction(1, 2), 0), "basic": True, "note": None}
        assert to_json_ready(data) == {"nu": ["1/2", "0"], "basic": True, "note": None}

    def test_from_json_ready(self):
        """Only the named keys are decoded."""
        data = {"nu": ["1/2", "1/2"], "group": "gl(n=2,d=1)"}
        restored = from_json_ready(data, frozenset({"nu"}))
        assert restored["nu"] == (Fraction(1, 2), Fraction(1, 2))
        assert restored["group"] == "gl(n=2,d=1)"

    def test_save_and_load(self, tmp_path):
        """save_json encodes rationals and creates parent directories."""
        path = tmp_path / "nested" / "report.json"
        save_json({"defect": 1, "nu": [Fraction(2, 5)]}, path)
        assert load_json(path) == {"defect": "1", "nu": ["2/5"]}

    def test_load_missing(self, tmp_path):
        """A missing or broken file returns the default."""
        assert load_json(tmp_path / "none.json", default={}) == {}
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        assert load_json(broken) is None

    def test_log_duration(self):
        """The decorator passes the result through."""
        @log_duration("square")
        def square(x):
            return x * x

        assert square(7) == 49
        assert square.__name__ == "square"


class TestLogger:
    """Test suite for the logging setup."""

    def test_context_in_file(self, tmp_path):
        """Records in the file sink carry the context tag."""
        path = tmp_path / "logs" / "run.log"
        log = setup_logger(log_level="INFO", log_file=str(path), context="bgmu", enable_console=False)
        log.info("three classes")
        log.complete()
        log.remove()
        text = path.read_text()
        assert "| bgmu |" in text
        assert "three classes" in text

    def test_console_only(self, tmp_path, capsys):
        """Disabling the file sink writes nothing to disk."""
        path = tmp_path / "unused.log"
        log = setup_logger(log_level="WARNING", log_file=str(path), enable_file=False)
        log.warning("window grew")
        log.remove()
        assert not path.exists()
        assert "window grew" in capsys.readouterr().err
