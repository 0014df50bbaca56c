"""Exact Schubert calculus on type-A flag varieties and morphism obstructions from projective spaces."""

__version__ = "0.1.0"
