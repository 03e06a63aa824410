"""Exact spectral and homological invariants of quadratic monomial star algebras."""

__version__ = "0.1.0"
