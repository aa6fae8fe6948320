"""Exact coefficient arithmetic and exact linear algebra."""

from .poly import IntPoly, QPoly, chebyshev_u, factored_str, poly_gcd, poly_str, qpoly_gcd
from .factor import factor_rational, signed_content
from .laurent import LaurentInt, bracket2, quantum_int
from .numberfield import NFElem, NumberField, evaluate_poly_at
from .linalg import (
    ExactMatrix,
    field_matrix_det,
    field_matrix_rank,
    int_matrix_rank,
    matrix_det,
    matrix_rank,
    poly_matrix_det,
    poly_matrix_rank,
    rational_matrix_rank,
)

__all__ = [
    "IntPoly", "QPoly", "chebyshev_u", "poly_gcd", "qpoly_gcd",
    "poly_str", "factored_str", "factor_rational", "signed_content",
    "LaurentInt", "quantum_int", "bracket2",
    "NumberField", "NFElem", "evaluate_poly_at",
    "ExactMatrix", "matrix_rank", "matrix_det",
    "int_matrix_rank", "rational_matrix_rank",
    "poly_matrix_rank", "poly_matrix_det",
    "field_matrix_rank", "field_matrix_det",
]
