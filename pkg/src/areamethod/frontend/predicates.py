"""Geometric predicates and their translation into (in)equalities of quantities."""

from __future__ import annotations

from areamethod.algebra import exprtree as et
from areamethod.conjecture import Clause, Conjecture, Relation

# name -> argument group sizes, e.g. parallel(A,B;C,D) has groups (2, 2)
SIGNATURES: dict[str, tuple[int, ...]] = {
    "collinear": (3,),
    "parallel": (2, 2),
    "perpendicular": (2, 2),
    "identical": (2,),
    "midpoint": (1, 2),
    "eqdist": (2, 2),
}

ZERO = et.const(0)


def _ne_zero(tree) -> Clause:
    return Clause(tree, Relation.NE, ZERO)


def format_predicate(name: str, groups: list[list[str]]) -> str:
    return f"{name}({';'.join(','.join(g) for g in groups)})"


def expand_predicate(name: str, groups: list[list[str]]) -> Conjecture:
    """Conjecture for a predicate; argument groups follow :data:`SIGNATURES`."""
    if name not in SIGNATURES:
        raise ValueError(f"unknown predicate {name!r}")
    sizes = tuple(len(g) for g in groups)
    if sizes != SIGNATURES[name]:
        raise ValueError(f"{name} takes argument groups of sizes {SIGNATURES[name]}, got {sizes}")
    origin = format_predicate(name, groups)
    if name == "collinear":
        a, b, c = groups[0]
        clauses = [Clause(et.S(a, b, c), Relation.EQ, ZERO)]
    elif name == "parallel":
        (a, b), (c, d) = groups
        clauses = [
            _ne_zero(et.P(a, b, a)),
            _ne_zero(et.P(c, d, c)),
            Clause(et.S(a, c, d), Relation.EQ, et.S(b, c, d)),
        ]
    elif name == "perpendicular":
        (a, b), (c, d) = groups
        clauses = [
            _ne_zero(et.P(a, b, a)),
            _ne_zero(et.P(c, d, c)),
            Clause(et.P(a, c, d), Relation.EQ, et.P(b, c, d)),
        ]
    elif name == "identical":
        a, b = groups[0]
        clauses = [Clause(et.P(a, b, a), Relation.EQ, ZERO)]
    elif name == "midpoint":
        (m,), (a, b) = groups
        clauses = [
            Clause(et.S(a, m, b), Relation.EQ, ZERO),
            Clause(et.ratio(a, m, a, b), Relation.EQ, et.div(et.const(1), et.const(2))),
        ]
    else:  # eqdist
        (a, b), (c, d) = groups
        clauses = [Clause(et.d2(a, b), Relation.EQ, et.d2(c, d))]
    return Conjecture(tuple(clauses), origin)
