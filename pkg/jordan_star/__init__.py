"""Exact construction and verification of star representations on Jordan tubes."""

__version__ = "0.1.0"
