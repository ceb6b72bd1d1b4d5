"""Expression trees as written by the user, before lowering to rational functions.

Leaves keep the user's argument order so a tree prints back to the text it
came from. Lowering canonicalizes every leaf against a construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from areamethod.algebra.quantities import (
    DIST_RATIO,
    PARAMETER,
    PYTH_DIFF,
    QUAD_DIST,
    SIGNED_AREA,
    Point,
    quaternary_terms,
)
from areamethod.algebra.rational import RationalExpr
from areamethod.errors import UnsupportedShape


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Quantity:
    """A raw geometric quantity or parameter leaf: kind in S, P, d2, ratio, param."""

    kind: str
    args: tuple[str, ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Neg:
    child: object


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Quotient:
    num: object
    den: object


@dataclass(frozen=True)
class IntPower:
    base: object
    exp: int


@dataclass(frozen=True)
class Sqrt:
    child: object


ExprTree = Union[Const, Quantity, Sum, Neg, Product, Quotient, IntPower, Sqrt]


def const(v) -> Const:
    return Const(Fraction(v))


def param(name: str) -> Quantity:
    return Quantity(PARAMETER, (name,))


def S(*pts: str) -> ExprTree:
    return quantity(SIGNED_AREA, pts)


def P(*pts: str) -> ExprTree:
    return quantity(PYTH_DIFF, pts)


def d2(a: str, b: str) -> Quantity:
    return Quantity(QUAD_DIST, (a, b))


def ratio(a: str, b: str, c: str, d: str) -> Quantity:
    return Quantity(DIST_RATIO, (a, b, c, d))


def dist(a: str, b: str) -> Sqrt:
    return Sqrt(d2(a, b))


def quantity(kind: str, args) -> ExprTree:
    """Build a leaf; four-point S and P are expanded into ternary terms."""
    args = tuple(args)
    if kind in (SIGNED_AREA, PYTH_DIFF) and len(args) == 4:
        return expand_quaternary(kind, args)
    return Quantity(kind, args)


def expand_quaternary(kind: str, args: tuple[str, ...]) -> ExprTree:
    if len(args) != 4:
        return Quantity(kind, tuple(args))
    (s1, t1), (s2, t2) = quaternary_terms(kind, tuple(args))
    first = Quantity(kind, t1)
    second = Quantity(kind, t2)
    return Sum((first, second if s2 > 0 else Neg(second)))


def add(*terms) -> ExprTree:
    return Sum(tuple(terms))


def sub(a, b) -> ExprTree:
    return Sum((a, Neg(b)))


def mul(*factors) -> ExprTree:
    return Product(tuple(factors))


def div(a, b) -> ExprTree:
    return Quotient(a, b)


# -- traversal ----------------------------------------------------------

def leaves(tree) -> list[Quantity]:
    out: list[Quantity] = []

    def walk(t):
        if isinstance(t, Quantity):
            out.append(t)
        elif isinstance(t, (Sum,)):
            for c in t.terms:
                walk(c)
        elif isinstance(t, Product):
            for c in t.factors:
                walk(c)
        elif isinstance(t, Quotient):
            walk(t.num)
            walk(t.den)
        elif isinstance(t, (Neg, Sqrt)):
            walk(t.child)
        elif isinstance(t, IntPower):
            walk(t.base)

    walk(tree)
    return out


def point_names(tree) -> set[str]:
    names: set[str] = set()
    for leaf in leaves(tree):
        if leaf.kind != PARAMETER:
            names.update(leaf.args)
    return names


def parameter_names(tree) -> set[str]:
    return {leaf.args[0] for leaf in leaves(tree) if leaf.kind == PARAMETER}


def has_sqrt(tree) -> bool:
    if isinstance(tree, Sqrt):
        return True
    if isinstance(tree, Sum):
        return any(has_sqrt(c) for c in tree.terms)
    if isinstance(tree, Product):
        return any(has_sqrt(c) for c in tree.factors)
    if isinstance(tree, Quotient):
        return has_sqrt(tree.num) or has_sqrt(tree.den)
    if isinstance(tree, Neg):
        return has_sqrt(tree.child)
    if isinstance(tree, IntPower):
        return has_sqrt(tree.base)
    return False


def lower_leaf(leaf: Quantity, resolve: Callable[[str], Point]) -> RationalExpr:
    if leaf.kind == PARAMETER:
        return RationalExpr.quantity(PARAMETER, (), leaf.args[0])
    pts = tuple(resolve(n) for n in leaf.args)
    if leaf.kind == QUAD_DIST:
        # squared distances stay as P[a,b,a]/2 until the Pythagorean expansion
        return RationalExpr.quantity(PYTH_DIFF, (pts[0], pts[1], pts[0])) * Fraction(1, 2)
    if leaf.kind in (SIGNED_AREA, PYTH_DIFF) and len(pts) == 4:
        total = RationalExpr.constant(0)
        for sign, t in quaternary_terms(leaf.kind, pts):
            total = total + RationalExpr.quantity(leaf.kind, t) * sign
        return total
    return RationalExpr.quantity(leaf.kind, pts)


def fold(tree, leaf_fn: Callable, sqrt_fn: Callable | None = None):
    """Evaluate a tree bottom-up in any field-like value type."""
    if isinstance(tree, Const):
        return leaf_fn(tree)
    if isinstance(tree, Quantity):
        return leaf_fn(tree)
    if isinstance(tree, Sum):
        vals = [fold(t, leaf_fn, sqrt_fn) for t in tree.terms]
        acc = vals[0]
        for v in vals[1:]:
            acc = acc + v
        return acc
    if isinstance(tree, Neg):
        return -fold(tree.child, leaf_fn, sqrt_fn)
    if isinstance(tree, Product):
        vals = [fold(t, leaf_fn, sqrt_fn) for t in tree.factors]
        acc = vals[0]
        for v in vals[1:]:
            acc = acc * v
        return acc
    if isinstance(tree, Quotient):
        return fold(tree.num, leaf_fn, sqrt_fn) / fold(tree.den, leaf_fn, sqrt_fn)
    if isinstance(tree, IntPower):
        return fold(tree.base, leaf_fn, sqrt_fn) ** tree.exp
    if isinstance(tree, Sqrt):
        if sqrt_fn is None:
            raise UnsupportedShape("square root in a context that needs a rational expression")
        return sqrt_fn(fold(tree.child, leaf_fn, sqrt_fn))
    raise TypeError(f"not an expression tree: {tree!r}")


def lower(tree, resolve: Callable[[str], Point]) -> RationalExpr:
    """Lower a radical-free tree to a canonical rational expression."""

    def leaf_fn(t):
        if isinstance(t, Const):
            return RationalExpr.constant(t.value)
        return lower_leaf(t, resolve)

    return fold(tree, leaf_fn)


# -- printing -----------------------------------------------------------

_PREC_SUM, _PREC_PROD, _PREC_UNARY, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def format_leaf(leaf: Quantity) -> str:
    a = leaf.args
    if leaf.kind == PARAMETER:
        return a[0]
    if leaf.kind == QUAD_DIST:
        return f"d2({a[0]},{a[1]})"
    if leaf.kind == DIST_RATIO:
        return f"ratio({a[0]},{a[1]};{a[2]},{a[3]})"
    return f"{leaf.kind}[{','.join(a)}]"


def _format_const(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def _prec(t) -> int:
    if isinstance(t, Sum):
        return _PREC_SUM
    if isinstance(t, (Product, Quotient)):
        return _PREC_PROD
    if isinstance(t, Neg):
        return _PREC_UNARY
    if isinstance(t, IntPower):
        return _PREC_POW
    if isinstance(t, Const) and (t.value < 0 or t.value.denominator != 1):
        return _PREC_PROD if t.value >= 0 else _PREC_UNARY
    return _PREC_ATOM


def format_expr(tree) -> str:
    """Print a tree in DSL syntax; parsing the output yields the same tree."""

    def wrap(t, min_prec: int) -> str:
        s = format_expr(t)
        return f"({s})" if _prec(t) < min_prec else s

    if isinstance(tree, Const):
        return _format_const(tree.value)
    if isinstance(tree, Quantity):
        return format_leaf(tree)
    if isinstance(tree, Sum):
        parts = [wrap(tree.terms[0], _PREC_SUM + 1)]
        for t in tree.terms[1:]:
            if isinstance(t, Neg):
                parts.append(f" - {wrap(t.child, _PREC_SUM + 1)}")
            else:
                parts.append(f" + {wrap(t, _PREC_SUM + 1)}")
        return "".join(parts)
    if isinstance(tree, Neg):
        return f"-{wrap(tree.child, _PREC_UNARY + 1)}"
    if isinstance(tree, Product):
        return " * ".join(wrap(t, _PREC_PROD + 1) for t in tree.factors)
    if isinstance(tree, Quotient):
        return f"{wrap(tree.num, _PREC_PROD + 1)} / {wrap(tree.den, _PREC_PROD + 1)}"
    if isinstance(tree, IntPower):
        return f"{wrap(tree.base, _PREC_ATOM)}^{tree.exp}" if tree.exp >= 0 else f"{wrap(tree.base, _PREC_ATOM)}^({tree.exp})"
    if isinstance(tree, Sqrt):
        if isinstance(tree.child, Quantity) and tree.child.kind == QUAD_DIST:
            a, b = tree.child.args
            return f"dist({a},{b})"
        return f"sqrt({format_expr(tree.child)})"
    raise TypeError(f"not an expression tree: {tree!r}")
