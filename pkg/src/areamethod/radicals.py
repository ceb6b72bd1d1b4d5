"""Expressions with square roots: elements of K(sqrt(g1), ..., sqrt(gn)).

An element is a map from a set of generators (radicands) to a coefficient
in K; the key ``{g1, g3}`` stands for ``sqrt(g1*g3)``. The same class serves
the exact numeric oracle (K = Q, generators are rationals) and the
inequality engine (K = rational functions, generators are polynomials).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Callable, Hashable

from areamethod.errors import SqrtOfNegative


@dataclass(frozen=True)
class Field:
    """Coefficient arithmetic for a :class:`Surd` family."""

    zero: Any
    one: Any
    is_zero: Callable[[Any], bool]
    lift: Callable[[Hashable], Any]      # generator -> coefficient value
    gen_key: Callable[[Hashable], Any]   # deterministic ordering of generators


class Surd:
    __slots__ = ("terms", "field")

    def __init__(self, terms: dict, field: Field):
        self.terms = {k: c for k, c in terms.items() if not field.is_zero(c)}
        self.field = field

    @classmethod
    def scalar(cls, c, field: Field) -> Surd:
        return cls({frozenset(): c}, field)

    @classmethod
    def root(cls, gen: Hashable, field: Field) -> Surd:
        return cls({frozenset([gen]): field.one}, field)

    # -- inspection ---------------------------------------------------
    def generators(self) -> set:
        gens: set = set()
        for k in self.terms:
            gens |= k
        return gens

    def is_scalar(self) -> bool:
        return all(not k for k in self.terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("expression still contains square roots")
        return self.terms.get(frozenset(), self.field.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def split(self, gen) -> tuple[Surd, Surd]:
        """Write self = a + b*sqrt(gen) with a, b free of gen."""
        a, b = {}, {}
        for k, c in self.terms.items():
            if gen in k:
                b[k - {gen}] = c
            else:
                a[k] = c
        return Surd(a, self.field), Surd(b, self.field)

    def map(self, coeff_fn: Callable, gen_fn: Callable) -> Surd:
        """Rebuild with transformed coefficients and generators."""
        out = Surd.scalar(self.field.zero, self.field)
        for k, c in self.terms.items():
            term = Surd.scalar(coeff_fn(c), self.field)
            for g in sorted(k, key=self.field.gen_key):
                term = term * gen_fn(g)
            out = out + term
        return out

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> Surd:
        if isinstance(other, Surd):
            return other
        return Surd.scalar(other, self.field)

    def __add__(self, other) -> Surd:
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return Surd(out, self.field)

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd({k: -c for k, c in self.terms.items()}, self.field)

    def __sub__(self, other) -> Surd:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Surd:
        return self._coerce(other) - self

    def __mul__(self, other) -> Surd:
        other = self._coerce(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for g in sorted(k1 & k2, key=self.field.gen_key):
                    c = c * self.field.lift(g)
                k = k1 ^ k2
                out[k] = out[k] + c if k in out else c
        return Surd(out, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Surd:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        num = self
        den = other
        # rationalize the denominator one generator at a time
        while not den.is_scalar():
            g = min(den.generators(), key=self.field.gen_key)
            a, b = den.split(g)
            conj = a - b * Surd.root(g, self.field)
            num = num * conj
            den = den * conj
            if den.is_zero():
                raise ZeroDivisionError("division by zero")
        d = den.scalar_value()
        return Surd({k: c / d for k, c in num.terms.items()}, self.field)

    def __pow__(self, n: int) -> Surd:
        if n < 0:
            return Surd.scalar(self.field.one, self.field) / (self ** -n)
        result = Surd.scalar(self.field.one, self.field)
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"Surd({self.terms!r})"


# -- exact numeric instance ----------------------------------------------

def _frac_sqrt(c: Fraction) -> Fraction | None:
    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


NUMERIC = Field(
    zero=Fraction(0),
    one=Fraction(1),
    is_zero=lambda c: c == 0,
    lift=lambda g: g,
    gen_key=lambda g: g,
)


def num(c) -> Surd:
    return Surd.scalar(Fraction(c), NUMERIC)


def num_sqrt(x: Surd) -> Surd:
    """Exact square root of a rational-valued numeric surd."""
    if not x.is_scalar():
        raise ValueError("nested square roots are not supported")
    v = Fraction(x.scalar_value())
    if v < 0:
        raise SqrtOfNegative(f"sqrt of negative value {v}")
    if v == 0:
        return num(0)
    r = _frac_sqrt(v)
    if r is not None:
        return num(r)
    # sqrt(n/d) = sqrt(n*d)/d keeps generators integral
    return Surd({frozenset([Fraction(v.numerator * v.denominator)]): Fraction(1, v.denominator)}, NUMERIC)


def sign(x: Surd) -> int:
    """Exact sign of a numeric surd, by splitting on one generator and squaring."""
    if x.is_zero():
        return 0
    if x.is_scalar():
        v = x.scalar_value()
        return (v > 0) - (v < 0)
    g = min(x.generators())
    a, b = x.split(g)
    sa, sb = sign(a), sign(b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    d = a * a - b * b * Surd.scalar(g, NUMERIC)
    return sa * sign(d)


def compare(x: Surd, y: Surd) -> int:
    return sign(x - y)
