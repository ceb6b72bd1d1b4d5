"""Rational functions in geometric quantities.

Equality is decided by cross-multiplication and expansion; there is no
multivariate GCD. Normalization only strips common monomial factors,
makes the denominator's leading coefficient 1, and divides the numerator
by the denominator when that happens to be exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from areamethod.algebra.polynomial import ONE_MONOMIAL, Coeff, Polynomial
from areamethod.algebra.quantities import (
    DIST_RATIO,
    PYTH_DIFF,
    QUAD_DIST,
    Atom,
    Point,
    canonicalize_atom,
)
from areamethod.errors import DegenerateDenominator

_ONE = Polynomial.constant(1)


class RationalExpr:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, *, normalize: bool = True):
        if den is None:
            den = _ONE
        if den.is_zero():
            raise DegenerateDenominator("denominator is the zero polynomial")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: Coeff) -> RationalExpr:
        return cls(Polynomial.constant(c), normalize=False)

    @classmethod
    def from_atom(cls, atom: Atom, coeff: Coeff = 1) -> RationalExpr:
        return cls(Polynomial.from_atom(atom, coeff), normalize=False)

    @classmethod
    def quantity(cls, kind: str, points: tuple[Point, ...] = (), name: str = "") -> RationalExpr:
        c, atom = canonicalize_atom(kind, points, name)
        if atom is None:
            return cls.constant(c)
        return cls.from_atom(atom, c)

    # -- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return Fraction(self.num.constant_value()) / Fraction(self.den.constant_value())

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def atoms(self) -> set[Atom]:
        return self.num.atoms() | self.den.atoms()

    def point_names(self) -> set[str]:
        names: set[str] = set()
        for a in self.atoms():
            names |= a.point_names
        return names

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: RationalExpr | Coeff) -> RationalExpr:
        other = _lift(other)
        if self.den == other.den:
            return RationalExpr(self.num + other.num, self.den)
        if other.den.is_constant() and self.den.is_constant():
            return RationalExpr(self.num * other.den + other.num * self.den, self.den * other.den)
        q = self.den.divide_exact(other.den) if len(self.den) >= len(other.den) else None
        if q is not None:
            return RationalExpr(self.num + other.num * q, self.den)
        q = other.den.divide_exact(self.den) if len(other.den) >= len(self.den) else None
        if q is not None:
            return RationalExpr(self.num * q + other.num, other.den)
        return RationalExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalExpr:
        return RationalExpr(-self.num, self.den, normalize=False)

    def __sub__(self, other: RationalExpr | Coeff) -> RationalExpr:
        return self + (-_lift(other))

    def __rsub__(self, other: Coeff) -> RationalExpr:
        return _lift(other) - self

    def __mul__(self, other: RationalExpr | Coeff) -> RationalExpr:
        other = _lift(other)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        return RationalExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalExpr | Coeff) -> RationalExpr:
        other = _lift(other)
        if other.num.is_zero():
            raise DegenerateDenominator("division by an expression that is identically zero")
        return RationalExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Coeff) -> RationalExpr:
        return _lift(other) / self

    def __pow__(self, n: int) -> RationalExpr:
        if n < 0:
            return RationalExpr.constant(1) / (self ** (-n))
        return RationalExpr(self.num ** n, self.den ** n)

    def evaluate(self, value: Callable[[Atom], Fraction]) -> Fraction:
        d = self.den.evaluate(value)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.evaluate(value) / d

    # -- comparison / display ----------------------------------------
    def __eq__(self, other: object) -> bool:
        """Structural equality of the normalized form (use :func:`rexpr_equal` for mathematical equality)."""
        if isinstance(other, (int, Fraction)):
            other = RationalExpr.constant(other)
        if not isinstance(other, RationalExpr):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1 or "*" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalExpr({self})"


ZERO = RationalExpr(Polynomial(), normalize=False)
ONE = RationalExpr(Polynomial.constant(1), normalize=False)


def _lift(x: RationalExpr | Coeff) -> RationalExpr:
    if isinstance(x, RationalExpr):
        return x
    return RationalExpr.constant(x)


def _normalize(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if num.is_zero():
        return num, _ONE
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(Fraction(1) / Fraction(c))), _ONE
    g = _common_monomial(num, den)
    if g:
        num = num.div_monomial(g)
        den = den.div_monomial(g)
    lc = Fraction(den.leading_coefficient())
    if lc != 1:
        num = num.scale(1 / lc)
        den = den.scale(1 / lc)
    if den.is_constant():
        return num, _ONE
    if den.is_monomial():
        return num, den
    # exact cancellation by the whole denominator, when available
    if len(num) >= len(den):
        q = num.divide_exact(den)
        if q is not None:
            return q, _ONE
    return num, den


def _common_monomial(a: Polynomial, b: Polynomial) -> tuple:
    ga = a.monomial_content()
    if not ga:
        return ONE_MONOMIAL
    gb = b.monomial_content()
    if not gb:
        return ONE_MONOMIAL
    eb = dict(gb)
    return tuple((x, min(e, eb[x])) for x, e in ga if x in eb)


# -- public operations --------------------------------------------------

def is_zero(e: RationalExpr) -> bool:
    """True iff the numerator expands to the zero polynomial."""
    return e.num.is_zero()


def rexpr_equal(a: RationalExpr, b: RationalExpr) -> bool:
    """Decide ``a == b`` as rational functions by cross-multiplication."""
    return (a.num * b.den - b.num * a.den).is_zero()


def substitute(e: RationalExpr, target: Atom, replacement: RationalExpr) -> RationalExpr:
    """Replace every occurrence of ``target`` in ``e`` by ``replacement``."""
    num_parts = e.num.coefficients_in(target)
    den_parts = e.den.coefficients_in(target)
    if set(num_parts) <= {0} and set(den_parts) <= {0}:
        return e
    p, q = replacement.num, replacement.den
    n = max(num_parts)
    m = max(den_parts)
    top = max(n, m)
    p_pows = [Polynomial.constant(1)]
    q_pows = [Polynomial.constant(1)]
    q_const = q.is_constant()
    for _ in range(top):
        p_pows.append(p_pows[-1] * p)
        if not q_const:
            q_pows.append(q_pows[-1] * q)

    def homogenize(parts: dict[int, Polynomial], deg: int) -> Polynomial:
        acc = Polynomial()
        for i, c in parts.items():
            term = c * p_pows[i]
            if q_const:
                term = term.scale(Fraction(q.constant_value()) ** (deg - i))
            elif deg - i:
                term = term * q_pows[deg - i]
            acc = acc + term
        return acc

    new_num = homogenize(num_parts, n)
    new_den = homogenize(den_parts, m)
    if new_den.is_zero():
        raise DegenerateDenominator(f"substituting {target} := {replacement} makes a denominator vanish")
    # num/q^n over den/q^m
    if q_const:
        k = Fraction(q.constant_value()) ** (m - n)
        return RationalExpr(new_num.scale(k), new_den)
    if n >= m:
        return RationalExpr(new_num, new_den * q_pows[n - m])
    return RationalExpr(new_num * q_pows[m - n], new_den)


def substitute_many(e: RationalExpr, mapping: Iterable[tuple[Atom, RationalExpr]]) -> RationalExpr:
    for atom, repl in mapping:
        e = substitute(e, atom, repl)
    return e


def pythagoras_replacement(atom: Atom) -> RationalExpr:
    """P[a,b,c] = d2(a,b) + d2(b,c) - d2(a,c)."""
    a, b, c = atom.points
    return (
        RationalExpr.quantity(QUAD_DIST, (a, b))
        + RationalExpr.quantity(QUAD_DIST, (b, c))
        - RationalExpr.quantity(QUAD_DIST, (a, c))
    )


def expand_pythagoras(e: RationalExpr) -> tuple[RationalExpr, list[tuple[Atom, RationalExpr]]]:
    """Replace every Pythagorean difference by squared distances.

    Returns the new expression and the substitutions performed, in order.
    """
    done = []
    for atom in sorted(a for a in e.atoms() if a.kind == PYTH_DIFF):
        repl = pythagoras_replacement(atom)
        e = substitute(e, atom, repl)
        done.append((atom, repl))
    return e, done


def has_ratio(e: RationalExpr) -> bool:
    return any(a.kind == DIST_RATIO for a in e.atoms())


__all__ = [
    "RationalExpr",
    "ZERO",
    "ONE",
    "is_zero",
    "rexpr_equal",
    "substitute",
    "substitute_many",
    "expand_pythagoras",
    "pythagoras_replacement",
]
