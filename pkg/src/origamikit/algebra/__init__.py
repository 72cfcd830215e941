"""Exact scalars, sparse polynomials and rational functions."""

from .poly import PolyMV, normalize_locus, poly_divmod, poly_eval, poly_gcd, solve_quadratic
from .quadratic import IncompatibleFields, QuadElt, squarefree_part
from .ratfunc import I, RatFunc
from .scalars import ParseError, format_scalar, parse_scalar

__all__ = [
    "I",
    "IncompatibleFields",
    "ParseError",
    "PolyMV",
    "QuadElt",
    "RatFunc",
    "format_scalar",
    "normalize_locus",
    "parse_scalar",
    "poly_divmod",
    "poly_eval",
    "poly_gcd",
    "solve_quadratic",
    "squarefree_part",
]
