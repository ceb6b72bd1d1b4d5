"""Geometric quantities as canonical atoms.

Every atom is stored in canonical form: arguments sorted by construction
order with the permutation sign pulled out into a scalar, and degenerate
quantities (repeated points) replaced by constants before an atom is ever
created.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from areamethod.errors import DegenerateDenominator

SIGNED_AREA = "S"
PYTH_DIFF = "P"
QUAD_DIST = "d2"
DIST_RATIO = "ratio"
PARAMETER = "param"

_KIND_RANK = {SIGNED_AREA: 0, PYTH_DIFF: 1, QUAD_DIST: 2, DIST_RATIO: 3, PARAMETER: 4}


@dataclass(frozen=True)
class Point:
    """A point name together with its order in a construction.

    ``order`` is 0 for points not bound to any construction; those sort by
    name alone.
    """

    name: str
    order: int = 0

    @property
    def key(self) -> tuple[int, str]:
        return (self.order, self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Atom:
    kind: str
    points: tuple[Point, ...] = ()
    name: str = ""
    key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "key", (_KIND_RANK[self.kind], tuple(p.key for p in self.points), self.name)
        )

    def __lt__(self, other: Atom) -> bool:
        return self.key < other.key

    def mentions(self, name: str) -> bool:
        return any(p.name == name for p in self.points)

    @property
    def point_names(self) -> frozenset[str]:
        return frozenset(p.name for p in self.points)

    def __str__(self) -> str:
        names = [p.name for p in self.points]
        if self.kind == SIGNED_AREA:
            return f"S[{','.join(names)}]"
        if self.kind == PYTH_DIFF:
            return f"P[{','.join(names)}]"
        if self.kind == QUAD_DIST:
            return f"d2({names[0]},{names[1]})"
        if self.kind == DIST_RATIO:
            return f"ratio({names[0]},{names[1]};{names[2]},{names[3]})"
        return self.name


def parameter(name: str) -> Atom:
    return Atom(PARAMETER, (), name)


def _sort_with_parity(points: tuple[Point, ...]) -> tuple[tuple[Point, ...], int]:
    items = list(points)
    sign = 1
    # insertion sort so the number of swaps gives the permutation parity
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1].key > items[j].key:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return tuple(items), sign


def canonicalize_atom(kind: str, points: tuple[Point, ...] = (), name: str = "") -> tuple[Fraction, Atom | None]:
    """Return ``(coefficient, atom)`` such that the raw quantity equals ``coefficient * atom``.

    ``atom`` is None when the quantity is a constant (degenerate cases and
    ratios of a segment with itself); the value is then ``coefficient``.
    """
    if kind == PARAMETER:
        return Fraction(1), Atom(PARAMETER, (), name)
    names = [p.name for p in points]

    if kind == SIGNED_AREA:
        if len(set(names)) < 3:
            return Fraction(0), None
        ordered, sign = _sort_with_parity(points)
        return Fraction(sign), Atom(SIGNED_AREA, ordered)

    if kind == PYTH_DIFF:
        a, b, c = points
        if a.name == b.name or b.name == c.name:
            return Fraction(0), None
        if a.name == c.name:
            # P[a,b,a] = 2 ab^2 = P[b,a,b]; keep the lower point outside
            if a.key > b.key:
                a, b, c = b, a, b
        elif a.key > c.key:
            a, c = c, a
        return Fraction(1), Atom(PYTH_DIFF, (a, b, c))

    if kind == QUAD_DIST:
        a, b = points
        if a.name == b.name:
            return Fraction(0), None
        if a.key > b.key:
            a, b = b, a
        return Fraction(1), Atom(QUAD_DIST, (a, b))

    if kind == DIST_RATIO:
        a, b, c, d = points
        if c.name == d.name:
            raise DegenerateDenominator(f"ratio({a},{b};{c},{d}) has a zero-length denominator")
        if a.name == b.name:
            return Fraction(0), None
        sign = 1
        if a.key > b.key:
            a, b, sign = b, a, -sign
        if c.key > d.key:
            c, d, sign = d, c, -sign
        if (a.name, b.name) == (c.name, d.name):
            return Fraction(sign), None
        return Fraction(sign), Atom(DIST_RATIO, (a, b, c, d))

    raise ValueError(f"unknown quantity kind {kind!r}")


def canonicalize(atom: Atom) -> tuple[Fraction, Atom | None]:
    """Canonicalize an already-built atom (idempotent on canonical atoms)."""
    return canonicalize_atom(atom.kind, atom.points, atom.name)


def quaternary_terms(kind: str, points: tuple) -> list[tuple[int, tuple]]:
    """Expand a four-point signed area or Pythagorean difference into signed ternary terms.

    S[w,x,y,z] = S[w,x,y] + S[w,y,z];  P[w,x,y,z] = P[w,x,z] - P[y,x,z].
    Works on any point representation (names or :class:`Point`).
    """
    w, x, y, z = points
    if kind == SIGNED_AREA:
        return [(1, (w, x, y)), (1, (w, y, z))]
    if kind == PYTH_DIFF:
        return [(1, (w, x, z)), (-1, (y, x, z))]
    raise ValueError(f"no quaternary form for {kind!r}")
