"""Test suite for Newton Strata."""

__all__ = []
