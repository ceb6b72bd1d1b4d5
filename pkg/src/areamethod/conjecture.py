"""Conjectures: conjunctions of (in)equalities between expression trees."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from areamethod.algebra import exprtree as et


class Relation(Enum):
    EQ = "="
    NE = "!="
    LE = "<="
    LT = "<"
    GE = ">="
    GT = ">"

    @classmethod
    def parse(cls, text: str) -> Relation:
        if text == "==":
            return cls.EQ
        for r in cls:
            if r.value == text:
                return r
        raise ValueError(f"unknown relation {text!r}")

    @property
    def is_inequality(self) -> bool:
        return self in (Relation.LE, Relation.LT, Relation.GE, Relation.GT)

    def holds(self, sign: int) -> bool:
        """Whether ``lhs rel rhs`` holds given ``sign(lhs - rhs)``."""
        return {
            Relation.EQ: sign == 0,
            Relation.NE: sign != 0,
            Relation.LE: sign <= 0,
            Relation.LT: sign < 0,
            Relation.GE: sign >= 0,
            Relation.GT: sign > 0,
        }[self]


@dataclass(frozen=True)
class Clause:
    lhs: object  # ExprTree
    rel: Relation
    rhs: object  # ExprTree

    def __str__(self) -> str:
        return f"{et.format_expr(self.lhs)} {self.rel.value} {et.format_expr(self.rhs)}"


@dataclass(frozen=True)
class Conjecture:
    """A conjunction of clauses; ``origin`` names the predicate it came from, if any."""

    clauses: tuple[Clause, ...]
    origin: str = ""

    @classmethod
    def equation(cls, lhs, rhs, rel: Relation = Relation.EQ, origin: str = "") -> Conjecture:
        return cls((Clause(lhs, rel, rhs),), origin)

    def point_names(self) -> set[str]:
        names: set[str] = set()
        for cl in self.clauses:
            names |= et.point_names(cl.lhs) | et.point_names(cl.rhs)
        return names

    def parameter_names(self) -> set[str]:
        names: set[str] = set()
        for cl in self.clauses:
            names |= et.parameter_names(cl.lhs) | et.parameter_names(cl.rhs)
        return names

    def __str__(self) -> str:
        if self.origin:
            return self.origin
        return " and ".join(str(c) for c in self.clauses)
