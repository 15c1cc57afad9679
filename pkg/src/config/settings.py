"""
Settings Management for Newton Strata
=====================================
Loads configuration from a .env file and provides validated access to the
tunable search and verification parameters.
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv


_VALID_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class SettingsError(Exception):
    """Raised when configuration is invalid."""
    pass


class Settings:
    """
    Configuration settings loader and validator.

    Reads optional overrides from .env (searched upwards from this file) and
    the process environment. Every value has a default, so an empty
    environment is a valid configuration.

    Attributes:
        log_level: Logging level for console and file sinks
        log_file: Explicit log file path, or None for logs/newton.log
        window_pad: Padding B of the B(G, mu) lift window
        check_stability: Whether enumerate_BGmu re-runs at B+2
        sample_size: Random affine Weyl elements per group in sweeps
        seed: Seed for the random samplers
        oracle_max_length: Radius of the BFS length oracle
        straight_max_power: Largest n in the sigma-power length identity
        output_dir: Directory for JSON reports written by scripts

    Example:
        >>> settings = Settings()
        >>> settings.validate_all()
        >>> settings.window_pad
        1
    """

    def __init__(self, env_file: Optional[str] = None):
        """
        Initialize settings by loading from .env file.

        Args:
            env_file: Path to .env file. If None, searches for .env upwards.

        Raises:
            SettingsError: If a value cannot be converted to its type.
        """
        if env_file:
            env_path = Path(env_file)
        else:
            current_dir = Path(__file__).resolve().parent
            env_path = None
            for parent in [current_dir] + list(current_dir.parents):
                candidate = parent / ".env"
                if candidate.exists():
                    env_path = candidate
                    break

        if env_path and env_path.exists():
            load_dotenv(env_path)
            self._env_file_path = str(env_path)
        else:
            load_dotenv()
            self._env_file_path = ".env (default location)"

        self._log_level = os.getenv("LOG_LEVEL", "INFO").upper()
        self._log_file = os.getenv("LOG_FILE") or None
        self._window_pad = self._read_int("BGMU_WINDOW_PAD", 1)
        self._check_stability = os.getenv(
            "BGMU_CHECK_STABILITY", "true").lower() == "true"
        self._sample_size = self._read_int("VERIFY_SAMPLE_SIZE", 500)
        self._seed = self._read_int("VERIFY_SEED", 20240611)
        self._oracle_max_length = self._read_int("ORACLE_MAX_LENGTH", 8)
        self._straight_max_power = self._read_int("STRAIGHT_MAX_POWER", 4)
        self._output_dir = os.getenv("OUTPUT_DIR", "data/results")

    @staticmethod
    def _read_int(name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            return int(raw)
        except ValueError as e:
            raise SettingsError(f"{name} must be an integer, got {raw!r}") from e

    @property
    def log_level(self) -> str:
        """Get logging level."""
        return self._log_level

    @property
    def log_file(self) -> Optional[str]:
        """Get explicit log file path (None means the default location)."""
        return self._log_file

    @property
    def window_pad(self) -> int:
        """Get the padding of the B(G, mu) lift window."""
        return self._window_pad

    @property
    def check_stability(self) -> bool:
        """Check if the enumeration window is re-verified at B+2."""
        return self._check_stability

    @property
    def sample_size(self) -> int:
        """Get the number of random elements per group in sweeps."""
        return self._sample_size

    @property
    def seed(self) -> int:
        """Get the random seed."""
        return self._seed

    @property
    def oracle_max_length(self) -> int:
        """Get the BFS radius of the length oracle."""
        return self._oracle_max_length

    @property
    def straight_max_power(self) -> int:
        """Get the largest power checked in the straightness identity."""
        return self._straight_max_power

    def validate_all(self) -> dict[str, bool]:
        """
        Validate every setting.

        Returns:
            Dictionary mapping setting names to validation status.

        Raises:
            SettingsError: If any setting is out of range, listing all problems.
        """
        checks = {
            "log_level": self._log_level in _VALID_LEVELS,
            "window_pad": self._window_pad >= 0,
            "sample_size": self._sample_size >= 1,
            "oracle_max_length": 0 <= self._oracle_max_length <= 16,
            "straight_max_power": self._straight_max_power >= 1,
        }
        errors = [name for name, ok in checks.items() if not ok]
        if errors:
            raise SettingsError(
                "Configuration validation failed:\n" +
                "\n".join(f"  - {name} has an invalid value" for name in errors)
            )
        return checks

    def get_output_dir(self) -> Path:
        """
        Get the report output directory, creating it if needed.

        Returns:
            Path object pointing to the output directory.
        """
        output_dir = Path(self._output_dir)
        if not output_dir.is_absolute():
            output_dir = Path(__file__).resolve().parents[2] / output_dir
        output_dir.mkdir(parents=True, exist_ok=True)
        return output_dir

    def __repr__(self) -> str:
        """String representation of settings."""
        return (
            f"Settings(\n"
            f"  env_file='{self._env_file_path}',\n"
            f"  log_level='{self._log_level}',\n"
            f"  window_pad={self._window_pad},\n"
            f"  check_stability={self._check_stability},\n"
            f"  sample_size={self._sample_size},\n"
            f"  seed={self._seed},\n"
            f"  oracle_max_length={self._oracle_max_length},\n"
            f"  straight_max_power={self._straight_max_power},\n"
            f"  output_dir='{self._output_dir}'\n"
            f")"
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide Settings instance."""
    return Settings()
