"""Trivalent dihedrants and bi-dihedrants: constructions, automorphism
groups, Cayley-ness and normality tests, and explicit witness maps."""

__version__ = "0.1.0"
