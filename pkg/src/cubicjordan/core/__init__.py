"""Exact scalar, polynomial and projective-point arithmetic."""

from .linalg import det, in_span, nullspace, rank, rref, solve
from .maps import (
    RationalMap,
    line_restriction,
    normalize_projective,
    primitive_tuple,
    proj_equal,
    restrict_to_line,
)
from .poly import Poly, linear_form, monomials, poly_sum, variables
from .scalar import QuadScalar, conj, fmt_scalar, squarefree_part, to_scalar

__all__ = [
    "Poly", "QuadScalar", "RationalMap", "conj", "det", "fmt_scalar", "in_span",
    "line_restriction", "linear_form", "monomials", "normalize_projective", "nullspace",
    "poly_sum", "primitive_tuple", "proj_equal", "rank", "restrict_to_line", "rref",
    "solve", "squarefree_part", "to_scalar", "variables",
]
