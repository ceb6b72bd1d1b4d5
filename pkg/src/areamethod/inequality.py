"""A deliberately incomplete decision procedure for inequalities with square roots.

The clause is normalized to ``F >= 0`` (or ``F > 0``). Square roots become
generators of a radical extension over reduced rational expressions; a
generator g is removed by writing ``F = A + B*sqrt(g)`` and squaring:

* A >= 0 and B >= 0: done;
* B >= 0: it suffices that B^2 g - A^2 >= 0;
* A >= 0 and B <= 0: it suffices that A^2 - B^2 g >= 0.

Radical-free expressions are certified nonnegative syntactically: either
every term has a positive coefficient and only even powers (or squared
distances), or the polynomial is a positive multiple of a perfect square.
The check runs on squared distances first and then in area coordinates.
Anything else falls back to an oracle search for a violation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from areamethod import oracle
from areamethod.algebra import exprtree as et
from areamethod.algebra.polynomial import Polynomial, poly_sqrt
from areamethod.algebra.quantities import QUAD_DIST
from areamethod.algebra.rational import RationalExpr
from areamethod.area_coords import install_frame, is_scale_invariant, to_area_coordinates
from areamethod.conjecture import Clause, Conjecture, Relation
from areamethod.construction import Construction
from areamethod.errors import (
    SqrtOfNegative,
    TooFewFreePoints,
    UnsupportedAtom,
    UnsupportedShape,
)
from areamethod.radicals import Field, Surd
from areamethod.trace import ProofTrace, TraceStep

MAX_SQUARINGS = 2

SYMBOLIC = Field(
    zero=RationalExpr.constant(0),
    one=RationalExpr.constant(1),
    is_zero=lambda e: e.is_zero(),
    lift=lambda g: g,
    gen_key=str,
)


class _Engine:
    def __init__(self, session, c: Construction, trace: Optional[ProofTrace], clause: int):
        self.session = session
        self.c = c
        self.trace = trace
        self.clause = clause
        self.frame = None

    def note(self, text: str) -> None:
        if self.trace is not None:
            self.trace.add(TraceStep("inequality", self.clause, text))

    def reduce(self, e: RationalExpr) -> RationalExpr:
        return self.session.reduce_full(self.c, e, None, self.clause)

    # -- building ----------------------------------------------------
    def surd(self, tree) -> Surd:
        def leaf(t):
            if isinstance(t, et.Const):
                return Surd.scalar(RationalExpr.constant(t.value), SYMBOLIC)
            return Surd.scalar(self.c.lower(t), SYMBOLIC)

        def sqrt(x: Surd) -> Surd:
            if not x.is_scalar():
                raise UnsupportedShape("nested square roots are not supported")
            g = self.reduce(x.scalar_value())
            if g.is_zero():
                return Surd.scalar(SYMBOLIC.zero, SYMBOLIC)
            if g.is_constant():
                v = g.constant_value()
                if v < 0:
                    raise SqrtOfNegative(f"sqrt of negative constant {v}")
            if not self.nonneg(g):
                if self.nonneg(-g) and not g.is_zero():
                    raise SqrtOfNegative(f"sqrt of {g}, which is provably nonpositive")
                raise UnsupportedShape(f"cannot show sqrt argument {g} is nonnegative")
            root = _exact_root(g)
            if root is not None:
                return Surd.scalar(root, SYMBOLIC)
            return Surd.root(g, SYMBOLIC)

        value = et.fold(tree, leaf, sqrt)
        return Surd({k: self.reduce(v) for k, v in value.terms.items()}, SYMBOLIC)

    # -- nonnegativity -------------------------------------------------
    def nonneg(self, e: RationalExpr) -> bool:
        """Certify e >= 0 (generically)."""
        if e.is_zero():
            return True
        p = e.num * e.den  # same sign as num/den wherever den != 0
        if _syntactically_nonneg(p):
            return True
        if not is_scale_invariant(RationalExpr(p)):
            return False
        try:
            if self.frame is None:
                _, self.frame = install_frame(self.c)
            form = to_area_coordinates(RationalExpr(p), self.frame)
        except (TooFewFreePoints, UnsupportedAtom, ZeroDivisionError):
            return False
        if not form.n1.is_zero():
            return False
        q = form.n0 * form.den
        if _syntactically_nonneg(q):
            if self.trace is not None:
                self.trace.used_area_coords = True
            self.note(f"in area coordinates {p} becomes {q}, which is nonnegative")
            return True
        return False

    def decide(self, f: Surd, depth: int = 0) -> bool:
        """Certify f >= 0."""
        if f.is_zero():
            return True
        if f.is_scalar():
            return self.nonneg(f.scalar_value())
        g = min(f.generators(), key=SYMBOLIC.gen_key)
        a, b = f.split(g)
        if self.decide(a, depth) and self.decide(b, depth):
            return True
        if depth >= MAX_SQUARINGS:
            return False
        gs = Surd.scalar(g, SYMBOLIC)
        if self.decide(b, depth):
            rest = b * b * gs - a * a
            self.note(f"square out sqrt({g}): need {_fmt(rest)} >= 0")
            if self.decide(rest, depth + 1):
                return True
        if self.decide(a, depth) and self.decide(-b, depth):
            rest = a * a - b * b * gs
            self.note(f"square out sqrt({g}): need {_fmt(rest)} >= 0")
            if self.decide(rest, depth + 1):
                return True
        return False


def _fmt(f: Surd) -> str:
    parts = []
    for k, v in f.terms.items():
        roots = "*".join(f"sqrt({g})" for g in sorted(k, key=str))
        parts.append(f"({v})" + (f"*{roots}" if roots else ""))
    return " + ".join(parts) or "0"


def _exact_root(g: RationalExpr) -> Optional[RationalExpr]:
    if not g.den.is_constant():
        return None
    r = poly_sqrt(g.num)
    if r is None:
        return None
    c = Fraction(g.den.constant_value())
    n, d = c.numerator, c.denominator
    from math import isqrt

    if isqrt(n) ** 2 != n or isqrt(d) ** 2 != d:
        return None
    # only valid as the nonnegative root when r is itself nonnegative
    if not _syntactically_nonneg(r):
        return None
    return RationalExpr(r, Polynomial.constant(Fraction(isqrt(n), isqrt(d))))


def _nonneg_monomial(mono) -> bool:
    return all(e % 2 == 0 or a.kind == QUAD_DIST for a, e in mono)


def _syntactically_nonneg(p: Polynomial) -> bool:
    if p.is_zero():
        return True
    if all(c > 0 and _nonneg_monomial(m) for m, c in p):
        return True
    lc = Fraction(p.leading_coefficient())
    if lc <= 0:
        return False
    return poly_sqrt(p.scale(1 / lc)) is not None


def decide_clause(session, c: Construction, clause: Clause, idx: int, trace: ProofTrace):
    """Verdict for an inequality, or for an (in)equality containing square roots."""
    from areamethod.prover import Outcome, Verdict

    rel = clause.rel
    if rel in (Relation.LE, Relation.LT):
        lhs, rhs = clause.rhs, clause.lhs
    else:
        lhs, rhs = clause.lhs, clause.rhs
    engine = _Engine(session, c, trace, idx)
    trace.add(TraceStep("uniformize", idx, f"normalized: {et.format_expr(lhs)} - ({et.format_expr(rhs)}) {'>' if rel in (Relation.LT, Relation.GT) else '>='} 0"
                        if rel.is_inequality else f"normalized: {et.format_expr(lhs)} - ({et.format_expr(rhs)}) {rel.value} 0"))
    try:
        f = engine.surd(lhs) - engine.surd(rhs)
    except UnsupportedShape as exc:
        return Verdict(Outcome.NOT_REDUCED, reason=str(exc))

    certified = False
    if rel.is_inequality:
        certified = engine.decide(f)
        if certified and rel in (Relation.LT, Relation.GT):
            # generic strictness: F >= 0 and F is not identically zero
            certified = _strict_somewhere(session, c, clause)
            if not certified:
                engine.note("difference vanishes on every sample; strict inequality not generic")
    elif rel is Relation.EQ:
        certified = f.is_zero()
    if certified:
        engine.note("certified")
        return Verdict(Outcome.PROVED)
    if rel is Relation.NE and f.is_zero():
        cx = session.counterexample(c, clause)
        if cx is not None:
            return Verdict(Outcome.DISPROVED, counterexample=cx)
    cx = session.counterexample(c, clause)
    if cx is not None:
        engine.note("oracle found a violating configuration")
        return Verdict(Outcome.DISPROVED, counterexample=cx)
    if rel is Relation.NE:
        return Verdict(Outcome.UNKNOWN, reason="radical expression not certified nonzero")
    return Verdict(Outcome.UNKNOWN, reason="inequality not certified and no violation found")


def _strict_somewhere(session, c: Construction, clause: Clause) -> bool:
    conj = Conjecture((clause,))
    for i in range(session.options.oracle_samples):
        try:
            m = oracle.realize(c, f"{session.options.seed}/strict/{i}")
            if oracle.check(conj, m):
                return True
        except (ZeroDivisionError, SqrtOfNegative):
            continue
    return False
