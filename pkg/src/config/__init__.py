"""Configuration module for Newton Strata."""

from .settings import Settings, SettingsError, get_settings

__all__ = ["Settings", "SettingsError", "get_settings"]
