"""Area coordinates: rewrite free-point quantities over an installed frame (ACL1-ACL3).

The first two free points serve as O and X; a fresh point Y is added by
ECS5(Y,O,X,1). Every free point A then has the independent coordinates
S[O,X,A] and S_OYA (stored canonically as -S[O,A,Y]). With OX = OY = 1,
ACL3 gives S[O,X,Y]^2 = 1/4; only even powers are reduced, so the result is
``(n0 + n1*s) / d`` with s = S[O,X,Y].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from areamethod.algebra import exprtree as et
from areamethod.algebra.polynomial import Polynomial
from areamethod.algebra.quantities import (
    PARAMETER,
    PYTH_DIFF,
    QUAD_DIST,
    SIGNED_AREA,
    Atom,
    Point,
    canonicalize_atom,
)
from areamethod.algebra.rational import RationalExpr, expand_pythagoras
from areamethod.construction import Construction, OnPerpendicular
from areamethod.errors import TooFewFreePoints, UnsupportedAtom

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class Frame:
    o: Point
    x: Point
    y: Point

    @property
    def s_atom(self) -> Atom:
        return Atom(SIGNED_AREA, (self.o, self.x, self.y))

    def __str__(self) -> str:
        return f"O={self.o}, X={self.x}, Y={self.y}"


def install_frame(c: Construction) -> tuple[Construction, Frame]:
    """Extend ``c`` by ECS5(Y,O,X,1); idempotent on an already framed construction."""
    free = c.free_points()
    if len(free) < 2:
        raise TooFewFreePoints(f"area coordinates need two free points, found {len(free)}")
    o, x = free[0], free[1]
    if c.frame_point is not None:
        return c, Frame(o, x, c.point(c.frame_point))
    name = c.fresh_name("Y")
    framed = c.with_frame(OnPerpendicular(name, o.name, x.name, et.const(1)))
    return framed, Frame(o, x, framed.point(name))


def coordinates(a: Point, f: Frame) -> tuple[Polynomial, Polynomial]:
    """(S[O,X,A], S_OYA) for a free point A."""
    return _quantity_poly((f.o, f.x, a)), _quantity_poly((f.o, f.y, a))


def _quantity_poly(points: tuple[Point, ...]) -> Polynomial:
    c, atom = canonicalize_atom(SIGNED_AREA, points)
    return Polynomial.constant(c) if atom is None else Polynomial.from_atom(atom, c)


def _acl1(atom: Atom, f: Frame) -> Polynomial:
    a, b, c = atom.points
    xa, ya = coordinates(a, f)
    xb, yb = coordinates(b, f)
    xc, yc = coordinates(c, f)
    num = (yb - yc) * xa + (yc - ya) * xb + (ya - yb) * xc
    # 1/s = 4s because s^2 = 1/4
    return num * Polynomial.from_atom(f.s_atom, 4)


def _acl2(atom: Atom, f: Frame) -> Polynomial:
    a, b = atom.points
    xa, ya = coordinates(a, f)
    xb, yb = coordinates(b, f)
    dy, dx = ya - yb, xa - xb
    # OX^2 = OY^2 = 1 and 1/s^2 = 4
    return (dy * dy + dx * dx).scale(4)


def is_coordinate(atom: Atom, f: Frame) -> bool:
    if atom.kind == PARAMETER:
        return True
    if atom.kind != SIGNED_AREA:
        return False
    p = atom.points
    return p == (f.o, f.x, f.y) or (p[0] == f.o and (p[1] == f.x or p[2] == f.y))


def reduce_frame_square(p: Polynomial, s: Atom) -> tuple[Polynomial, Polynomial]:
    """Write ``p`` as ``n0 + n1*s`` using s^2 = 1/4."""
    n0, n1 = Polynomial(), Polynomial()
    for e, coeff in p.coefficients_in(s).items():
        scale = QUARTER ** (e // 2)
        if e % 2:
            n1 = n1 + coeff.scale(scale)
        else:
            n0 = n0 + coeff.scale(scale)
    return n0, n1


@dataclass(frozen=True)
class CoordinateForm:
    """``(n0 + n1*s) / den`` with s = S[O,X,Y], s^2 = 1/4 already applied."""

    n0: Polynomial
    n1: Polynomial
    den: Polynomial
    s: Atom

    def as_rexpr(self) -> RationalExpr:
        s = Polynomial.from_atom(self.s)
        return RationalExpr(self.n0 + self.n1 * s, self.den)

    def at_orientation(self, sign: int) -> Polynomial:
        """Numerator with s fixed to sign/2."""
        return self.n0 + self.n1.scale(Fraction(sign, 2))


def to_area_coordinates(e: RationalExpr, f: Frame) -> CoordinateForm:
    """Rewrite a free-point expression into area coordinates."""
    if any(a.kind == PYTH_DIFF for a in e.atoms()):
        e, _ = expand_pythagoras(e)
    mapping: dict[Atom, Polynomial] = {}
    for atom in sorted(e.atoms()):
        if is_coordinate(atom, f):
            continue
        if atom.kind == SIGNED_AREA:
            mapping[atom] = _acl1(atom, f)
        elif atom.kind == QUAD_DIST:
            mapping[atom] = _acl2(atom, f)
        else:
            raise UnsupportedAtom(f"{atom} has no area-coordinate form")
    top = e.num.substitute_polys(mapping)
    bottom = e.den.substitute_polys(mapping)
    s = f.s_atom
    t0, t1 = reduce_frame_square(top, s)
    b0, b1 = reduce_frame_square(bottom, s)
    if not b1.is_zero():
        # multiply through by the conjugate b0 - b1*s
        t0, t1 = t0 * b0 - (t1 * b1).scale(QUARTER), t1 * b0 - t0 * b1
        b0 = b0 * b0 - (b1 * b1).scale(QUARTER)
    if b0.is_zero():
        raise ZeroDivisionError("denominator vanishes in area coordinates")
    return CoordinateForm(t0, t1, b0, s)


def weight(atom: Atom) -> int:
    """Scaling dimension: areas and squared lengths scale alike, ratios and parameters not at all."""
    return 1 if atom.kind in (SIGNED_AREA, PYTH_DIFF, QUAD_DIST) else 0


def _poly_homogeneous(p: Polynomial) -> bool:
    degrees = {sum(weight(x) * e for x, e in m) for m, _ in p}
    return len(degrees) <= 1


def is_scale_invariant(e: RationalExpr) -> bool:
    """True when numerator and denominator are each homogeneous in scaling weight.

    Only then may the frame be taken of unit size without loss of generality.
    """
    return _poly_homogeneous(e.num) and _poly_homogeneous(e.den)
