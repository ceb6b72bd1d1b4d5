"""Proof traces: the ordered record of everything the prover did to a conjecture."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from areamethod.algebra.quantities import Atom
from areamethod.algebra.rational import RationalExpr, substitute


@dataclass
class TraceStep:
    """One event of a proof.

    ``kind`` is one of uniformize, eliminate, pythagoras, area-coordinates,
    zero-test, inequality, note. Elimination and expansion steps carry the
    exact ``(atom, replacement)`` pair so a trace can be replayed.
    """

    kind: str
    clause: int
    text: str
    point: Optional[str] = None
    lemma: Optional[int] = None
    branch: Optional[str] = None
    atom: Optional[Atom] = None
    replacement: Optional[RationalExpr] = None
    expr: Optional[RationalExpr] = None  # expression after this step, when tracked


@dataclass
class NdgRecord:
    step: str
    ndg: str
    status: str
    prefix_order: int


@dataclass
class ProofTrace:
    conjecture: str = ""
    construction: str = ""
    steps: list[TraceStep] = field(default_factory=list)
    ndg_checks: list[NdgRecord] = field(default_factory=list)
    used_area_coords: bool = False
    elapsed_ms: Optional[float] = None

    def add(self, step: TraceStep) -> None:
        self.steps.append(step)

    def clause_steps(self, clause: int) -> list[TraceStep]:
        return [s for s in self.steps if s.clause == clause]

    def eliminations(self) -> list[TraceStep]:
        return [s for s in self.steps if s.kind == "eliminate"]


def replay(trace: ProofTrace, clause: int = 0) -> RationalExpr | None:
    """Re-apply the recorded substitutions of one clause to its uniformized form.

    Returns the expression reached after the last substitution step (before
    any area-coordinate rewrite), or None if the clause was never uniformized.
    """
    e: RationalExpr | None = None
    for s in trace.clause_steps(clause):
        if s.kind == "uniformize":
            e = s.expr
        elif s.kind in ("eliminate", "pythagoras") and e is not None:
            e = substitute(e, s.atom, s.replacement)
    return e


def reduced_expression(trace: ProofTrace, clause: int = 0) -> RationalExpr | None:
    """The last tracked expression of a clause before area coordinates."""
    last = None
    for s in trace.clause_steps(clause):
        if s.kind in ("uniformize", "eliminate", "pythagoras") and s.expr is not None:
            last = s.expr
    return last
