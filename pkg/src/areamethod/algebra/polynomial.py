"""Sparse multivariate polynomials over the rationals, in atom indeterminates."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Iterator, Mapping, Union

from areamethod.algebra.quantities import Atom

Coeff = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[Atom, int], ...], sorted by atom key

ONE_MONOMIAL: Monomial = ()


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        xa, ea = a[i]
        xb, eb = b[j]
        if xa is xb or xa == xb:
            out.append((xa, ea + eb))
            i += 1
            j += 1
        elif xa.key < xb.key:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b if b divides a, else None."""
    if not b:
        return a
    exps = dict(a)
    for x, e in b:
        have = exps.get(x, 0)
        if have < e:
            return None
        if have == e:
            del exps[x]
        else:
            exps[x] = have - e
    return tuple((x, exps[x]) for x, _ in a if x in exps)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial) -> tuple:
    """Graded lexicographic key: total degree, then exponents from the highest atom down.

    This is a monomial order (compatible with multiplication), which exact
    division and square roots rely on.
    """
    return (mono_degree(m), tuple(sorted(((x.key, e) for x, e in m), reverse=True)))


def mono_str(m: Monomial) -> str:
    parts = []
    for x, e in m:
        parts.append(str(x) if e == 1 else f"{x}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial ``{monomial: coefficient}`` with no zero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None, *, _trusted: bool = False):
        if terms is None:
            self._terms: dict[Monomial, Coeff] = {}
        elif _trusted:
            self._terms = terms  # type: ignore[assignment]
        else:
            self._terms = {m: _norm(c) for m, c in terms.items() if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: Coeff) -> Polynomial:
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def from_atom(cls, atom: Atom, coeff: Coeff = 1, power: int = 1) -> Polynomial:
        return cls({((atom, power),): coeff})

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Coeff]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Coeff]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(ONE_MONOMIAL, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def atoms(self) -> set[Atom]:
        found: set[Atom] = set()
        for m in self._terms:
            for x, _ in m:
                found.add(x)
        return found

    def degree_in(self, atom: Atom) -> int:
        best = 0
        for m in self._terms:
            for x, e in m:
                if x == atom and e > best:
                    best = e
        return best

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=0)

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        return sorted(self._terms.items(), key=lambda t: mono_sort_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, Coeff]:
        m = max(self._terms, key=mono_sort_key)
        return m, self._terms[m]

    def leading_coefficient(self) -> Coeff:
        return self.leading_term()[1]

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: Polynomial | Coeff) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = _norm(v + c)
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other: Polynomial | Coeff) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> Polynomial:
        return Polynomial.constant(other) - self

    def scale(self, c: Coeff) -> Polynomial:
        c = _norm(c)
        if c == 0:
            return Polynomial()
        if c == 1:
            return self
        return Polynomial({m: _norm(v * c) for m, v in self._terms.items()}, _trusted=True)

    def __mul__(self, other: Polynomial | Coeff) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((mb, cb),) = b.items()
            return Polynomial({mono_mul(m, mb): _norm(c * cb) for m, c in a.items()}, _trusted=True)
        out: dict[Monomial, Coeff] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Polynomial({m: _norm(c) for m, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, mono: Monomial, c: Coeff = 1) -> Polynomial:
        return Polynomial({mono_mul(m, mono): _norm(v * c) for m, v in self._terms.items()}, _trusted=True)

    def div_monomial(self, mono: Monomial) -> Polynomial:
        out = {}
        for m, c in self._terms.items():
            q = mono_div(m, mono)
            if q is None:
                raise ValueError("monomial does not divide every term")
            out[q] = c
        return Polynomial(out, _trusted=True)

    # -- structure ----------------------------------------------------
    def monomial_content(self) -> Monomial:
        """Greatest monomial dividing every term."""
        it = iter(self._terms)
        try:
            first = next(it)
        except StopIteration:
            return ONE_MONOMIAL
        common = dict(first)
        for m in it:
            if not common:
                break
            exps = dict(m)
            for x in list(common):
                e = exps.get(x, 0)
                if e == 0:
                    del common[x]
                elif e < common[x]:
                    common[x] = e
        return tuple((x, common[x]) for x, _ in first if x in common)

    def content(self) -> Fraction:
        """Positive rational gcd of the coefficients (0 for the zero polynomial)."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def coefficients_in(self, atom: Atom) -> dict[int, Polynomial]:
        """Split as ``sum_i coeff_i * atom**i`` with coeff_i free of ``atom``."""
        parts: dict[int, dict[Monomial, Coeff]] = {}
        for m, c in self._terms.items():
            e = 0
            rest = m
            for idx, (x, ex) in enumerate(m):
                if x == atom:
                    e = ex
                    rest = m[:idx] + m[idx + 1:]
                    break
            parts.setdefault(e, {})[rest] = c
        return {e: Polynomial(t, _trusted=True) for e, t in parts.items()}

    def divide_exact(self, divisor: Polynomial) -> Polynomial | None:
        """Exact quotient ``self / divisor`` or None when the division leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial()
        if divisor.is_constant():
            return self.scale(Fraction(1) / Fraction(divisor.constant_value()))
        lm, lc = divisor.leading_term()
        lc = Fraction(lc)
        remainder = dict(self._terms)
        quotient: dict[Monomial, Coeff] = {}
        dterms = list(divisor._terms.items())
        while remainder:
            m = max(remainder, key=mono_sort_key)
            q = mono_div(m, lm)
            if q is None:
                return None
            qc = _norm(remainder[m] / lc)
            quotient[q] = qc
            for dm, dc in dterms:
                pm = mono_mul(dm, q)
                v = _norm(remainder.get(pm, 0) - qc * dc)
                if v:
                    remainder[pm] = v
                else:
                    remainder.pop(pm, None)
        return Polynomial(quotient, _trusted=True)

    def substitute_polys(self, mapping: Mapping[Atom, Polynomial]) -> Polynomial:
        """Replace atoms by polynomials (no denominators involved)."""
        if not mapping:
            return self
        powers: dict[tuple[Atom, int], Polynomial] = {}
        acc: dict[Monomial, Coeff] = {}
        pending: list[Polynomial] = []
        for m, c in self._terms.items():
            kept = []
            replaced: list[Polynomial] = []
            for x, e in m:
                if x in mapping:
                    key = (x, e)
                    p = powers.get(key)
                    if p is None:
                        p = mapping[x] ** e
                        powers[key] = p
                    replaced.append(p)
                else:
                    kept.append((x, e))
            if not replaced:
                acc[m] = acc.get(m, 0) + c
                continue
            term = Polynomial({tuple(kept): c}, _trusted=True)
            for p in replaced:
                term = term * p
            pending.append(term)
        result = Polynomial({m: c for m, c in acc.items() if c})
        for t in pending:
            result = result + t
        return result

    def evaluate(self, value: Callable[[Atom], Fraction]) -> Fraction:
        total = Fraction(0)
        cache: dict[Atom, Fraction] = {}
        for m, c in self._terms.items():
            t = Fraction(c)
            for x, e in m:
                v = cache.get(x)
                if v is None:
                    v = cache[x] = Fraction(value(x))
                t *= v ** e
            total += t
        return total

    def map_coefficients(self, f: Callable[[Coeff], Coeff]) -> Polynomial:
        return Polynomial({m: f(c) for m, c in self._terms.items()})

    # -- comparison / display ----------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if not m:
                body = _coeff_str(a)
            elif a == 1:
                body = mono_str(m)
            else:
                body = f"{_coeff_str(a)}*{mono_str(m)}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coeff_str(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    acc: dict[Monomial, Coeff] = {}
    for p in polys:
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + c
    return Polynomial({m: c for m, c in acc.items() if c})


def poly_sqrt(p: Polynomial) -> Polynomial | None:
    """Polynomial square root ``q`` with ``q*q == p`` (leading coefficient positive), or None."""
    if p.is_zero():
        return Polynomial()
    lm, lc = p.leading_term()
    if any(e % 2 for _, e in lm):
        return None
    root_c = _rational_sqrt(Fraction(lc))
    if root_c is None:
        return None
    root_m = tuple((x, e // 2) for x, e in lm)
    q = Polynomial({root_m: root_c})
    two_lead = Polynomial({root_m: 2 * root_c})
    remainder = p - q * q
    # each step peels the next term of q off the leading term of the remainder
    for _ in range(2 * len(p.terms) + 2):
        if remainder.is_zero():
            return q
        rm, rc = remainder.leading_term()
        tm = mono_div(rm, root_m)
        if tm is None:
            return None
        t = Polynomial({tm: Fraction(rc) / (2 * Fraction(root_c))})
        if mono_sort_key(tm) >= mono_sort_key(root_m):
            return None
        remainder = remainder - t * (two_lead + t)
        two_lead = two_lead + t * 2
        q = q + t
    return q if remainder.is_zero() else None


def _rational_sqrt(c: Fraction) -> Fraction | None:
    from math import isqrt

    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None
