"""Exact algebra over geometric-quantity atoms."""

from areamethod.algebra.polynomial import Polynomial, poly_sqrt
from areamethod.algebra.quantities import (
    DIST_RATIO,
    PARAMETER,
    PYTH_DIFF,
    QUAD_DIST,
    SIGNED_AREA,
    Atom,
    Point,
    canonicalize,
    canonicalize_atom,
    parameter,
)
from areamethod.algebra.rational import (
    RationalExpr,
    expand_pythagoras,
    is_zero,
    rexpr_equal,
    substitute,
)

__all__ = [
    "Atom",
    "DIST_RATIO",
    "PARAMETER",
    "PYTH_DIFF",
    "Point",
    "Polynomial",
    "QUAD_DIST",
    "RationalExpr",
    "SIGNED_AREA",
    "canonicalize",
    "canonicalize_atom",
    "expand_pythagoras",
    "is_zero",
    "parameter",
    "poly_sqrt",
    "rexpr_equal",
    "substitute",
]
