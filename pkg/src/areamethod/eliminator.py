"""Elimination of constructed points via EL1-EL13.

A quantity containing the constructed point Y is first brought into one of
four shapes (ratio with Y, linear S, linear P, quadratic P); the shape and
the step that constructed Y select the lemma. Lemma side conditions and the
parallelism requirement on ratios are decided by the caller-supplied
``provable_zero`` callback, which runs the prover on a prefix construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from areamethod.algebra.quantities import (
    DIST_RATIO,
    PYTH_DIFF,
    SIGNED_AREA,
    Atom,
    Point,
    quaternary_terms,
)
from areamethod.algebra.rational import RationalExpr, substitute
from areamethod.construction import (
    Construction,
    Foot,
    Intersection,
    OnParallel,
    OnPerpendicular,
)
from areamethod.errors import DegenerateDenominator, UnsupportedShape

ProvableZero = Callable[[Construction, RationalExpr], bool]


class Shape(Enum):
    RATIO_YY = "AY/CY"
    RATIO_Y = "AY/CD"
    LINEAR_S = "S[A,B,Y]"
    LINEAR_P = "P[A,B,Y]"
    QUADRATIC_P = "P[A,Y,B]"


@dataclass(frozen=True)
class Pattern:
    """A quantity rewritten as ``coeff * shape(points)``, or its reciprocal when ``inverted``.

    For ratios ``points`` is (A, C) or (A, C, D); for S and P it is (A, B).
    """

    shape: Shape
    points: tuple[Point, ...]
    coeff: Fraction = Fraction(1)
    inverted: bool = False


@dataclass(frozen=True)
class LemmaApplication:
    lemma: int
    point: str
    branch: str
    atom: Atom
    replacement: RationalExpr

    def __str__(self) -> str:
        return f"eliminate {self.point} via EL{self.lemma} ({self.branch}): {self.atom} ⟶ {self.replacement}"


# -- quantity builders ---------------------------------------------------

def S(*pts: Point) -> RationalExpr:
    return _quantity(SIGNED_AREA, pts)


def P(*pts: Point) -> RationalExpr:
    return _quantity(PYTH_DIFF, pts)


def ratio(a: Point, b: Point, c: Point, d: Point) -> RationalExpr:
    return RationalExpr.quantity(DIST_RATIO, (a, b, c, d))


def _quantity(kind: str, pts: tuple[Point, ...]) -> RationalExpr:
    if len(pts) == 4:
        total = RationalExpr.constant(0)
        for sign, t in quaternary_terms(kind, pts):
            total = total + RationalExpr.quantity(kind, t) * sign
        return total
    return RationalExpr.quantity(kind, pts)


# -- target selection and classification ----------------------------------

def find_target_point(e: RationalExpr, c: Construction) -> Point | None:
    """The constructed point of maximal order occurring in ``e``."""
    best: Point | None = None
    for name in e.point_names():
        if name == c.frame_point or c.is_free(name):
            continue
        p = c.point(name)
        if best is None or p.order > best.order:
            best = p
    return best


def classify(a: Atom, y: Point) -> Pattern:
    """Rewrite atom ``a`` (which mentions ``y``) into a lemma shape."""
    pts = a.points
    if a.kind == SIGNED_AREA:
        i = pts.index(y)
        # cyclic rotation keeps the sign
        rotated = pts[i + 1:] + pts[:i]
        return Pattern(Shape.LINEAR_S, rotated)
    if a.kind == PYTH_DIFF:
        p0, p1, p2 = pts
        if p0 == p2:
            # P[x,z,x] = P[z,x,z]: Y is the middle point either way
            other = p1 if p0 == y else p0
            return Pattern(Shape.QUADRATIC_P, (other, other))
        if p1 == y:
            return Pattern(Shape.QUADRATIC_P, (p0, p2))
        if p2 == y:
            return Pattern(Shape.LINEAR_P, (p0, p1))
        return Pattern(Shape.LINEAR_P, (p2, p1))
    if a.kind == DIST_RATIO:
        a0, b0, c0, d0 = pts
        first = y in (a0, b0)
        second = y in (c0, d0)

        def pivot(p: Point, q: Point) -> tuple[Point, int]:
            # segment pq written as (other, Y) with the sign of the swap
            return (p, 1) if q == y else (q, -1)

        if first and second:
            (pa, sa), (pc, sc) = pivot(a0, b0), pivot(c0, d0)
            return Pattern(Shape.RATIO_YY, (pa, pc), Fraction(sa * sc))
        if first:
            pa, sa = pivot(a0, b0)
            return Pattern(Shape.RATIO_Y, (pa, c0, d0), Fraction(sa))
        if second:
            pc, sc = pivot(c0, d0)
            return Pattern(Shape.RATIO_Y, (pc, a0, b0), Fraction(sc), inverted=True)
    raise UnsupportedShape(f"no elimination lemma for {a} in point {y}")


# -- side conditions -----------------------------------------------------

def side_condition_holds(expr: RationalExpr, c: Construction, provable_zero: ProvableZero) -> bool:
    """Decide ``expr = 0`` over the smallest prefix construction containing its points."""
    if expr.is_zero():
        return True
    if expr.is_constant():
        return False
    orders = [c.point(n).order for n in expr.point_names()]
    k = max(orders) if orders else 1
    return provable_zero(c.prefix(k), expr)


def parallel_condition(pattern: Pattern, y: Point) -> RationalExpr:
    """Zero iff the two segments of a ratio pattern are parallel."""
    if pattern.shape is Shape.RATIO_YY:
        a, cc = pattern.points
        return S(a, cc, y)
    a, cc, d = pattern.points
    return S(a, cc, d) - S(y, cc, d)


# -- lemmas --------------------------------------------------------------

class _Ctx:
    def __init__(self, c: Construction, y: Point, provable_zero: ProvableZero):
        self.c = c
        self.y = y
        self.step = c.record(y.name).step
        self.provable_zero = provable_zero
        self.nested_ratios: set[Atom] = set()

    def pt(self, name: str) -> Point:
        return self.c.point(name)

    def param(self) -> RationalExpr:
        return self.c.lowered_parameter(self.step)

    def holds(self, expr: RationalExpr) -> bool:
        return side_condition_holds(expr, self.c, self.provable_zero)

    def nested(self, a: Point, b: Point, cc: Point, d: Point) -> RationalExpr:
        e = ratio(a, b, cc, d)
        self.nested_ratios |= {x for x in e.atoms() if x.kind == DIST_RATIO}
        return e


def _div(a: RationalExpr, b: RationalExpr, what: str) -> RationalExpr:
    if b.is_zero():
        raise DegenerateDenominator(f"lemma denominator {what} is identically zero")
    return a / b


def _ratio_lemma(ctx: _Ctx, pat: Pattern) -> tuple[int, str, RationalExpr]:
    step = ctx.step
    y = ctx.y
    yy = pat.shape is Shape.RATIO_YY
    if yy:
        a, cc = pat.points
        d = None
    else:
        a, cc, d = pat.points

    if isinstance(step, Intersection):
        u, v, p, q = (ctx.pt(n) for n in (step.u, step.v, step.p, step.q))
        if ctx.holds(S(a, u, v)):
            branch = f"{a} on {u}{v}"
            den = S(cc, p, q) if yy else S(cc, p, d, q)
            return 1, branch, _div(S(a, p, q), den, "of EL1")
        den = S(cc, u, v) if yy else S(cc, u, d, v)
        return 1, "otherwise", _div(S(a, u, v), den, "of EL1")

    if isinstance(step, Foot):
        p, u, v = (ctx.pt(n) for n in (step.p, step.u, step.v))
        if ctx.holds(S(a, u, v)):
            branch = f"{a} on {u}{v}"
            if yy:
                puv, pvu = P(p, u, v), P(p, v, u)
                num = puv * P(p, cc, a, v) + pvu * P(p, cc, a, u)
                den = puv * P(cc, v, cc) + pvu * P(cc, u, cc) - puv * pvu
                return 2, branch, _div(num, den, "of EL2")
            return 2, branch, _div(P(p, cc, a, d), P(cc, d, cc), "of EL2")
        den = S(cc, u, v) if yy else S(cc, u, d, v)
        return 2, "otherwise", _div(S(a, u, v), den, "of EL2")

    if isinstance(step, OnParallel):
        r = ctx.param()
        w, p, q = (ctx.pt(n) for n in (step.w, step.u, step.v))
        if ctx.holds(S(a, p, w, q)):
            branch = f"{a} on {w}{y}"
            num = ctx.nested(a, w, p, q) + r
            den = (ctx.nested(cc, w, p, q) + r) if yy else ctx.nested(cc, d, p, q)
            return 3, branch, _div(num, den, "of EL3")
        den = S(cc, p, w, q) if yy else S(cc, p, d, q)
        return 3, "otherwise", _div(S(a, p, w, q), den, "of EL3")

    if isinstance(step, OnPerpendicular):
        r = ctx.param()
        p, q = ctx.pt(step.u), ctx.pt(step.v)
        if ctx.holds(P(a, p, q)):
            branch = f"{a} on {p}{y}"
            shift = r * Fraction(1, 4) * P(p, q, p)
            num = S(a, p, q) - shift
            den = (S(cc, p, q) - shift) if yy else S(cc, p, d, q)
            return 4, branch, _div(num, den, "of EL4")
        den = P(cc, p, q) if yy else P(cc, p, d, q)
        return 4, "otherwise", _div(P(a, p, q), den, "of EL4")

    raise UnsupportedShape(f"{y} is not a constructed point")


def _linear_lemma(ctx: _Ctx, g: Callable[[Point], RationalExpr], kind: str, pat: Pattern) -> tuple[int, str, RationalExpr]:
    step = ctx.step
    a, b = pat.points
    if isinstance(step, Intersection):
        u, v, p, q = (ctx.pt(n) for n in (step.u, step.v, step.p, step.q))
        d = S(u, p, v, q)
        return 5, kind, _div(S(u, p, q) * g(v) - S(v, p, q) * g(u), d, "S[U,P,V,Q]")
    if isinstance(step, Foot):
        p, u, v = (ctx.pt(n) for n in (step.p, step.u, step.v))
        return 6, kind, _div(P(p, u, v) * g(v) + P(p, v, u) * g(u), P(u, v, u), "P[U,V,U]")
    if isinstance(step, OnParallel):
        r = ctx.param()
        w, u, v = (ctx.pt(n) for n in (step.w, step.u, step.v))
        return 7, kind, g(w) + r * (g(v) - g(u))
    if isinstance(step, OnPerpendicular):
        r = ctx.param()
        p, q = ctx.pt(step.u), ctx.pt(step.v)
        if pat.shape is Shape.LINEAR_S:
            return 8, kind, S(a, b, p) - r * Fraction(1, 4) * P(p, a, q, b)
        return 9, kind, P(a, b, p) - r * 4 * S(p, a, q, b)
    raise UnsupportedShape(f"{ctx.y} is not a constructed point")


def _quadratic_lemma(ctx: _Ctx, pat: Pattern) -> tuple[int, str, RationalExpr]:
    step = ctx.step
    a, b = pat.points
    kind = "P[A,Y,B]"
    if isinstance(step, Intersection):
        u, v, p, q = (ctx.pt(n) for n in (step.u, step.v, step.p, step.q))
        d = S(u, p, v, q)
        if d.is_zero():
            raise DegenerateDenominator("lemma denominator S[U,P,V,Q] is identically zero")
        supq, svpq = S(u, p, q), S(v, p, q)
        linear = (supq * P(a, v, b) - svpq * P(a, u, b)) / d
        return 10, kind, linear + supq * svpq * P(u, v, u) / (d * d)
    if isinstance(step, Foot):
        p, u, v = (ctx.pt(n) for n in (step.p, step.u, step.v))
        puv, pvu, uvu = P(p, u, v), P(p, v, u), P(u, v, u)
        if uvu.is_zero():
            raise DegenerateDenominator("lemma denominator P[U,V,U] is identically zero")
        return 11, kind, (puv * P(a, v, b) + pvu * P(a, u, b) - puv * pvu) / uvu
    if isinstance(step, OnParallel):
        r = ctx.param()
        w, u, v = (ctx.pt(n) for n in (step.w, step.u, step.v))
        return 12, kind, (
            P(a, w, b)
            + r * (P(a, v, b) - P(a, u, b) + 2 * P(w, u, v))
            - r * (1 - r) * P(u, v, u)
        )
    if isinstance(step, OnPerpendicular):
        r = ctx.param()
        p, q = ctx.pt(step.u), ctx.pt(step.v)
        return 13, kind, P(a, p, b) + r * r * P(p, q, p) - 4 * r * (S(a, p, q) + S(b, p, q))
    raise UnsupportedShape(f"{ctx.y} is not a constructed point")


def lemma_for(atom: Atom, y: Point, c: Construction, provable_zero: ProvableZero,
              *, check_parallel: bool = True) -> tuple[LemmaApplication, set[Atom]]:
    """Replacement for one atom mentioning ``y``; also returns lemma-internal ratio atoms."""
    ctx = _Ctx(c, y, provable_zero)
    pat = classify(atom, y)
    if pat.shape in (Shape.RATIO_YY, Shape.RATIO_Y):
        if check_parallel and not ctx.holds(parallel_condition(pat, y)):
            raise UnsupportedShape(f"{atom}: segments are not provably parallel")
        lemma, branch, value = _ratio_lemma(ctx, pat)
        if pat.inverted:
            value = _div(RationalExpr.constant(1), value, f"of EL{lemma} (reciprocal)")
    elif pat.shape is Shape.LINEAR_S:
        a, b = pat.points
        lemma, branch, value = _linear_lemma(ctx, lambda x: S(a, b, x), "S[A,B,Y]", pat)
    elif pat.shape is Shape.LINEAR_P:
        a, b = pat.points
        lemma, branch, value = _linear_lemma(ctx, lambda x: P(a, b, x), "P[A,B,Y]", pat)
    else:
        lemma, branch, value = _quadratic_lemma(ctx, pat)
    if pat.coeff != 1:
        value = value * pat.coeff
    return LemmaApplication(lemma, y.name, branch, atom, value), ctx.nested_ratios


def eliminate_point(e: RationalExpr, y: Point, c: Construction, provable_zero: ProvableZero,
                    exempt: frozenset[Atom] = frozenset()) -> tuple[RationalExpr, list[LemmaApplication], set[Atom]]:
    """Replace every atom mentioning ``y``.

    Ratio atoms in ``exempt`` were produced by an earlier lemma and skip the
    parallelism check. Returns the new expression, the applications in
    order, and the lemma-internal ratio atoms created along the way.
    """
    if c.is_free(y.name):
        raise UnsupportedShape(f"{y} is a free point")
    apps: list[LemmaApplication] = []
    nested: set[Atom] = set()
    targets = sorted(a for a in e.atoms() if a.mentions(y.name))
    for atom in targets:
        app, new = lemma_for(atom, y, c, provable_zero, check_parallel=atom not in exempt)
        e = substitute(e, atom, app.replacement)
        apps.append(app)
        nested |= new
    assert y.name not in e.point_names()
    return e, apps, nested
