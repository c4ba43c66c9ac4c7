"""Certified perfect-power search in polynomial power sums."""

__version__ = "0.1.0"
