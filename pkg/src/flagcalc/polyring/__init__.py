"""Exact polynomial arithmetic, Schubert polynomials and Borel's presentation."""

from .kernel import BACKEND
from .polynomial import IntPolynomial, Polynomial, PolynomialSyntaxError, parse_polynomial, x
from .schubert import (
    DomainError,
    SchubertExpansion,
    coinvariant_normal_form,
    divided_difference,
    divided_difference_word,
    expand_in_schubert_basis,
    schubert_from_staircase,
    schubert_polynomial,
    symmetric_generator,
)

__all__ = [
    "BACKEND", "DomainError", "IntPolynomial", "Polynomial", "PolynomialSyntaxError",
    "SchubertExpansion", "coinvariant_normal_form", "divided_difference",
    "divided_difference_word", "expand_in_schubert_basis", "parse_polynomial",
    "schubert_from_staircase", "schubert_polynomial", "symmetric_generator", "x",
]
