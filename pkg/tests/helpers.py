"""Constructions and generators shared by several test modules."""

from fractions import Fraction

from areamethod.algebra import exprtree as et
from areamethod.algebra.quantities import Point
from areamethod.algebra.rational import RationalExpr
from areamethod.construction import Construction, FreePoints, Intersection, OnParallel


def intercept(r=None) -> Construction:
    """ECS1(A,B,C); ECS4(D,B,A,C,r); ECS2(S,A,B,C,D) with r symbolic unless given."""
    ratio = et.param("r") if r is None else et.const(r)
    return Construction.from_steps(
        [
            FreePoints(("A", "B", "C")),
            OnParallel("D", "B", "A", "C", ratio),
            Intersection("S", "A", "B", "C", "D"),
        ],
        parameters=("r",) if r is None else (),
    )


def free(*names: str) -> Construction:
    return Construction.from_steps([FreePoints(tuple(names))])


def pts(*names: str) -> tuple[Point, ...]:
    return tuple(Point(n, i + 1) for i, n in enumerate(names))


def random_free_expression(rng, c: Construction, atoms: int = 4) -> RationalExpr:
    """A random rational expression in S, P and d2 atoms over the free points of ``c``."""
    names = [p.name for p in c.free_points()]

    def atom() -> RationalExpr:
        kind = rng.choice(["S", "S", "P", "d2"])
        k = 2 if kind == "d2" else 3
        args = [rng.choice(names) for _ in range(k)]
        tree = {"S": et.S, "P": et.P, "d2": et.d2}[kind](*args)
        return c.lower(tree)

    def poly() -> RationalExpr:
        total = RationalExpr.constant(rng.randint(-3, 3))
        for _ in range(rng.randint(1, atoms)):
            term = RationalExpr.constant(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
            for _ in range(rng.randint(1, 3)):
                term = term * atom()
            total = total + term
        return total

    num = poly()
    if rng.random() < 0.5:
        return num
    den = poly()
    return num if den.is_zero() else num / den
