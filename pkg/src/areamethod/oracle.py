"""Exact coordinate semantics for constructions and conjectures.

Free points and parameters are drawn as small random rationals, constructed
points are computed exactly, and expressions are evaluated without rounding.
Square roots are kept symbolic (:mod:`areamethod.radicals`) so comparisons
stay exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from areamethod.algebra import exprtree as et
from areamethod.algebra.quantities import (
    DIST_RATIO,
    PARAMETER,
    PYTH_DIFF,
    QUAD_DIST,
    SIGNED_AREA,
    Atom,
)
from areamethod.algebra.rational import RationalExpr
from areamethod.conjecture import Clause, Conjecture
from areamethod.construction import (
    Construction,
    Foot,
    FreePoints,
    Intersection,
    OnParallel,
    OnPerpendicular,
    ndg_conditions,
)
from areamethod.errors import DegenerateAfterRetries, NonParallelRatio, SqrtOfNegative
from areamethod import radicals
from areamethod.radicals import Surd

Coord = tuple[Fraction, Fraction]

MAX_RETRIES = 32


@dataclass(frozen=True)
class NumericModel:
    points: dict[str, Coord]
    params: dict[str, Fraction] = field(default_factory=dict)
    seed: object = None

    def __getitem__(self, name: str) -> Coord:
        return self.points[name]

    def describe(self) -> str:
        pts = ", ".join(f"{n}=({_fmt(x)},{_fmt(y)})" for n, (x, y) in self.points.items())
        if self.params:
            pts += "; " + ", ".join(f"{n}={_fmt(v)}" for n, v in self.params.items())
        return pts

    def to_dict(self) -> dict:
        return {
            "points": {n: [str(x), str(y)] for n, (x, y) in self.points.items()},
            "params": {n: str(v) for n, v in self.params.items()},
        }


def _fmt(v: Fraction) -> str:
    return str(v)


class Degenerate(Exception):
    """Internal signal: the current draw violates a step's preconditions."""


# -- primitive geometry ------------------------------------------------

def _sub(a: Coord, b: Coord) -> Coord:
    return (a[0] - b[0], a[1] - b[1])


def _cross(u: Coord, v: Coord) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: Coord, v: Coord) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def signed_area(a: Coord, b: Coord, c: Coord) -> Fraction:
    return _cross(_sub(b, a), _sub(c, a)) / 2


def quad_dist(a: Coord, b: Coord) -> Fraction:
    d = _sub(b, a)
    return _dot(d, d)


def pyth_diff(a: Coord, b: Coord, c: Coord) -> Fraction:
    return quad_dist(a, b) + quad_dist(b, c) - quad_dist(a, c)


def dist_ratio(a: Coord, b: Coord, c: Coord, d: Coord) -> Fraction:
    ab, cd = _sub(b, a), _sub(d, c)
    n = _dot(cd, cd)
    if n == 0:
        raise ZeroDivisionError("ratio with a zero-length denominator segment")
    if _cross(ab, cd) != 0:
        raise NonParallelRatio("ratio of non-parallel segments")
    return _dot(ab, cd) / n


def quantity_value(kind: str, pts: list[Coord]) -> Fraction:
    if kind == SIGNED_AREA:
        if len(pts) == 4:
            w, x, y, z = pts
            return signed_area(w, x, y) + signed_area(w, y, z)
        return signed_area(*pts)
    if kind == PYTH_DIFF:
        if len(pts) == 4:
            w, x, y, z = pts
            return pyth_diff(w, x, z) - pyth_diff(y, x, z)
        return pyth_diff(*pts)
    if kind == QUAD_DIST:
        return quad_dist(*pts)
    if kind == DIST_RATIO:
        return dist_ratio(*pts)
    raise ValueError(f"unknown quantity kind {kind!r}")


# -- evaluation ----------------------------------------------------------

def eval_atom(a: Atom, m: NumericModel) -> Fraction:
    if a.kind == PARAMETER:
        return m.params[a.name]
    return quantity_value(a.kind, [m.points[p.name] for p in a.points])


def eval_rexpr(e: RationalExpr, m: NumericModel) -> Fraction:
    return e.evaluate(lambda a: eval_atom(a, m))


def eval_tree(tree, m: NumericModel) -> Surd:
    """Exact value of an expression tree; square roots stay symbolic."""

    def leaf(t):
        if isinstance(t, et.Const):
            return radicals.num(t.value)
        if t.kind == PARAMETER:
            return radicals.num(m.params[t.args[0]])
        return radicals.num(quantity_value(t.kind, [m.points[n] for n in t.args]))

    return et.fold(tree, leaf, radicals.num_sqrt)


def eval_scalar(tree, m: NumericModel) -> Fraction:
    return eval_tree(tree, m).scalar_value()


def check_clause(cl: Clause, m: NumericModel) -> bool:
    diff = eval_tree(cl.lhs, m) - eval_tree(cl.rhs, m)
    return cl.rel.holds(radicals.sign(diff))


def check(conj: Conjecture, m: NumericModel) -> bool:
    """Decide the conjecture exactly in one model (errors propagate)."""
    return all(check_clause(cl, m) for cl in conj.clauses)


# -- realization ---------------------------------------------------------

def random_rational(rng: random.Random) -> Fraction:
    num = rng.randint(-10, 10)
    den = rng.randint(1, 10)
    return Fraction(num, den) * Fraction(2) ** rng.randint(-2, 2)


def _construct(step, pts: dict[str, Coord], m: NumericModel) -> Coord:
    if isinstance(step, Intersection):
        u, v, p, q = (pts[n] for n in (step.u, step.v, step.p, step.q))
        d1, d2 = _sub(v, u), _sub(q, p)
        den = _cross(d1, d2)
        if den == 0:
            raise Degenerate("parallel lines")
        t = _cross(_sub(p, u), d2) / den
        return (u[0] + t * d1[0], u[1] + t * d1[1])
    if isinstance(step, Foot):
        p, u, v = (pts[n] for n in (step.p, step.u, step.v))
        d = _sub(v, u)
        n = _dot(d, d)
        if n == 0:
            raise Degenerate("foot onto a degenerate line")
        t = _dot(_sub(p, u), d) / n
        return (u[0] + t * d[0], u[1] + t * d[1])
    if isinstance(step, OnParallel):
        w, u, v = (pts[n] for n in (step.w, step.u, step.v))
        r = _eval_param(step.r, m)
        d = _sub(v, u)
        return (w[0] + r * d[0], w[1] + r * d[1])
    if isinstance(step, OnPerpendicular):
        u, v = pts[step.u], pts[step.v]
        r = _eval_param(step.r, m)
        d = _sub(v, u)
        return (u[0] - r * d[1], u[1] + r * d[0])
    raise TypeError(f"unknown step {step!r}")


def _eval_param(tree, m: NumericModel) -> Fraction:
    try:
        return eval_scalar(tree, m)
    except (ZeroDivisionError, SqrtOfNegative, ValueError) as exc:
        raise Degenerate(str(exc)) from None


def _ndgs_hold(step, m: NumericModel) -> bool:
    for ndg in ndg_conditions(step):
        try:
            if eval_scalar(ndg.lhs, m) == eval_scalar(ndg.rhs, m):
                return False
        except ZeroDivisionError:
            return False
    return True


def _draw(c: Construction, rng: random.Random, assignments: Mapping[str, Coord], params: Mapping[str, Fraction], seed) -> NumericModel:
    pts: dict[str, Coord] = {}
    prm: dict[str, Fraction] = {}
    for name in c.parameters:
        prm[name] = Fraction(params[name]) if name in params else random_rational(rng)
    m = NumericModel(pts, prm, seed)
    for step in c.steps:
        if isinstance(step, FreePoints):
            for name in step.points:
                if name in assignments:
                    x, y = assignments[name]
                    pts[name] = (Fraction(x), Fraction(y))
                else:
                    pts[name] = (random_rational(rng), random_rational(rng))
            continue
        if not _ndgs_hold(step, m):
            raise Degenerate(f"ndg of {step} fails")
        pts[step.y] = _construct(step, pts, m)
    return m


def realize(c: Construction, seed=0, assignments: Mapping[str, Coord] | None = None,
            params: Mapping[str, Fraction] | None = None) -> NumericModel:
    """Exact realization of ``c``; degenerate draws are re-drawn up to a bound."""
    assignments = assignments or {}
    params = params or {}
    rng = random.Random(f"areamethod:{seed}")
    fully_fixed = all(n in assignments for n in (p.name for p in c.free_points())) and all(
        n in params for n in c.parameters
    )
    last = ""
    for _ in range(MAX_RETRIES):
        try:
            return _draw(c, rng, assignments, params, seed)
        except Degenerate as exc:
            last = str(exc)
            if fully_fixed:
                break
    raise DegenerateAfterRetries(f"no non-degenerate realization of {c}: {last}")


def models(c: Construction, seed, count: int) -> Iterator[NumericModel]:
    """``count`` independent realizations with seeds derived from ``seed``."""
    for i in range(count):
        yield realize(c, f"{seed}/{i}")


def find_counterexample(c: Construction, conj: Conjecture, seed=0, samples: int = 100) -> NumericModel | None:
    """Search for a realization in which the conjecture is exactly false."""
    for i in range(samples):
        try:
            m = realize(c, f"{seed}/cx/{i}")
        except DegenerateAfterRetries:
            return None
        try:
            if not check(conj, m):
                return m
        except (ZeroDivisionError, SqrtOfNegative):
            continue
    return None


def confirm(c: Construction, conj: Conjecture, seed=0, samples: int = 100) -> tuple[int, int]:
    """Count ``(confirmed, evaluable)`` samples in which the conjecture holds exactly."""
    ok = tried = 0
    for i in range(samples):
        m = realize(c, f"{seed}/ok/{i}")
        try:
            good = check(conj, m)
        except (ZeroDivisionError, SqrtOfNegative):
            continue
        tried += 1
        ok += good
    return ok, tried


def satisfies_ndgs(c: Construction, m: NumericModel) -> bool:
    return all(_ndgs_hold(step, m) for step in c.steps)
