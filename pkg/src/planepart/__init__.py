"""Exact enumeration and identity checks for refined Bender-Knuth generating functions."""

__version__ = "0.1.0"
