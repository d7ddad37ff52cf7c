"""Exact arithmetic substrate: matrices, permutations, polynomials, algebraic numbers."""

from .algebraic import AlgebraicReal, algebraic_compare, isolate_real_roots
from .factor import irreducible_factors
from .field import FieldElement, NumberField, common_field
from .matrix import IntMatrix
from .parse import (
    parse_bits,
    parse_digits,
    parse_point,
    parse_polynomial,
    parse_rational,
    parse_triple,
)
from .perm import Permutation, parse_permutation, perm_to_matrix
from .poly import Polynomial, char_poly

__all__ = [
    "AlgebraicReal",
    "FieldElement",
    "IntMatrix",
    "NumberField",
    "Permutation",
    "Polynomial",
    "algebraic_compare",
    "char_poly",
    "common_field",
    "irreducible_factors",
    "isolate_real_roots",
    "parse_bits",
    "parse_digits",
    "parse_permutation",
    "parse_point",
    "parse_polynomial",
    "parse_rational",
    "parse_triple",
    "perm_to_matrix",
]
