"""The proving pipeline: uniformize, check ndgs, eliminate, expand, area coordinates, decide.

Side conditions, ratio parallelism and ndg negations are decided by the
same pipeline on prefix constructions (with ndg checks skipped, so the
recursion is bounded by the construction length).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from areamethod import oracle
from areamethod.algebra import exprtree as et
from areamethod.algebra.quantities import DIST_RATIO, Atom
from areamethod.algebra.rational import RationalExpr, expand_pythagoras
from areamethod.area_coords import install_frame, is_scale_invariant, to_area_coordinates
from areamethod.conjecture import Clause, Conjecture, Relation
from areamethod.construction import (
    Construction,
    NdgCondition,
    NdgStatus,
    validate,
)
from areamethod.eliminator import eliminate_point, find_target_point
from areamethod.errors import (
    ConstructionInconsistent,
    TooFewFreePoints,
    UnsupportedAtom,
    UnsupportedShape,
)
from areamethod.oracle import NumericModel
from areamethod.trace import NdgRecord, ProofTrace, TraceStep


class Outcome(Enum):
    PROVED = "Proved"
    DISPROVED = "Disproved"
    NOT_REDUCED = "NotReduced"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    counterexample: Optional[NumericModel] = None
    residual: Optional[str] = None
    reason: str = ""

    @property
    def proved(self) -> bool:
        return self.outcome is Outcome.PROVED

    def __str__(self) -> str:
        if self.outcome is Outcome.DISPROVED and self.counterexample is not None:
            return f"Disproved (counterexample: {self.counterexample.describe()})"
        if self.outcome is Outcome.NOT_REDUCED:
            return f"NotReduced (residual: {self.residual})"
        if self.outcome is Outcome.UNKNOWN:
            return f"Unknown ({self.reason})"
        return self.outcome.value


@dataclass(frozen=True)
class ProverOptions:
    area_coords: str = "auto"  # auto | never | always
    oracle_samples: int = 100
    seed: int = 0
    skip_ndg: bool = False
    max_ms: Optional[int] = None
    timing: bool = False

    def __post_init__(self):
        if self.area_coords not in ("auto", "never", "always"):
            raise ValueError(f"area_coords must be auto, never or always, not {self.area_coords!r}")


class _Timeout(Exception):
    pass


# -- internal results ----------------------------------------------------

class _Zero(Enum):
    ZERO = "zero"          # identically zero: the equality is (generically) a theorem
    NONZERO = "nonzero"    # generically nonzero over independent quantities
    NOT_REDUCED = "not-reduced"
    UNKNOWN = "unknown"


@dataclass
class _ZeroResult:
    status: _Zero
    residual: Optional[RationalExpr] = None
    reason: str = ""


@dataclass
class Session:
    """One proof attempt; holds the sub-proof cache and the deadline."""

    options: ProverOptions
    deadline: Optional[float] = None
    cache: dict = field(default_factory=dict)

    # -- clock -----------------------------------------------------------
    def tick(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Timeout()

    # -- sub-proofs --------------------------------------------------------
    def provable_zero(self, c: Construction, e: RationalExpr) -> bool:
        """Generic provability of ``e = 0`` over ``c`` (used for side conditions and ndgs)."""
        key = (c.key, e)
        if key in self.cache:
            return bool(self.cache[key])
        self.cache[key] = False  # re-entrant queries are treated as unprovable
        res = self.zero_test(c, e, None, 0, mode="auto")
        self.cache[key] = res.status is _Zero.ZERO
        return self.cache[key]

    def negation_provable(self, c: Construction, ndg: NdgCondition) -> bool:
        e = c.lower(ndg.lhs) - c.lower(ndg.rhs)
        return self.provable_zero(c, e)

    # -- elimination -----------------------------------------------------------
    def reduce(self, c: Construction, e: RationalExpr, trace: Optional[ProofTrace], clause: int) -> RationalExpr:
        """Eliminate constructed points in reverse order; raises UnsupportedShape."""
        exempt: set[Atom] = set()
        while True:
            self.tick()
            y = find_target_point(e, c)
            if y is None:
                return e
            e, apps, nested = eliminate_point(e, y, c, self.provable_zero, frozenset(exempt))
            exempt |= nested
            if trace is not None:
                for i, app in enumerate(apps):
                    trace.add(TraceStep(
                        "eliminate", clause, str(app), point=app.point, lemma=app.lemma,
                        branch=app.branch, atom=app.atom, replacement=app.replacement,
                        expr=e if i == len(apps) - 1 else None,
                    ))

    def reduce_full(self, c: Construction, e: RationalExpr, trace: Optional[ProofTrace], clause: int) -> RationalExpr:
        """Eliminate, then expand Pythagorean differences."""
        e = self.reduce(c, e, trace, clause)
        if e.is_zero():
            return e
        expanded, subs = expand_pythagoras(e)
        if trace is not None and subs:
            for i, (atom, repl) in enumerate(subs):
                trace.add(TraceStep(
                    "pythagoras", clause, f"expand {atom} ⟶ {repl}", atom=atom, replacement=repl,
                    expr=expanded if i == len(subs) - 1 else None,
                ))
        return expanded

    def zero_test(self, c: Construction, e: RationalExpr, trace: Optional[ProofTrace], clause: int,
                  mode: Optional[str] = None) -> _ZeroResult:
        """Decide whether ``e`` vanishes generically over ``c``."""
        mode = mode or self.options.area_coords
        if trace is not None:
            trace.add(TraceStep("uniformize", clause, f"uniformized: {e} = 0", expr=e))
        try:
            e = self.reduce(c, e, trace, clause)
        except UnsupportedShape as exc:
            return _ZeroResult(_Zero.NOT_REDUCED, None, str(exc))
        if e.is_zero() and mode != "always":
            return self._done(trace, clause, _ZeroResult(_Zero.ZERO))
        expanded, subs = expand_pythagoras(e)
        if trace is not None and subs:
            for i, (atom, repl) in enumerate(subs):
                trace.add(TraceStep(
                    "pythagoras", clause, f"expand {atom} ⟶ {repl}", atom=atom, replacement=repl,
                    expr=expanded if i == len(subs) - 1 else None,
                ))
        e = expanded
        if e.is_zero() and mode != "always":
            return self._done(trace, clause, _ZeroResult(_Zero.ZERO))
        leftover = [a for a in e.atoms() if a.kind == DIST_RATIO]
        if leftover:
            return _ZeroResult(_Zero.NOT_REDUCED, e, f"ratio {leftover[0]} over free points has no elimination lemma")
        if mode != "always":
            if e.num.is_constant():
                return self._done(trace, clause, _ZeroResult(_Zero.NONZERO, e, "nonzero constant"))
            if e.num.is_monomial() and _generically_nonzero_monomial(e):
                return self._done(trace, clause, _ZeroResult(_Zero.NONZERO, e, "nonzero monomial in independent quantities"))
            if mode == "never":
                return _ZeroResult(_Zero.UNKNOWN, e, "not algebraically verifiable without area coordinates")
        return self._area_coordinates(c, e, trace, clause)

    def _area_coordinates(self, c: Construction, e: RationalExpr, trace: Optional[ProofTrace], clause: int) -> _ZeroResult:
        self.tick()
        try:
            framed, frame = install_frame(c)
        except TooFewFreePoints as exc:
            if e.is_zero():
                return _ZeroResult(_Zero.ZERO)
            return _ZeroResult(_Zero.UNKNOWN, e, str(exc))
        try:
            form = to_area_coordinates(e, frame)
        except (UnsupportedAtom, ZeroDivisionError) as exc:
            return _ZeroResult(_Zero.UNKNOWN, e, str(exc))
        if trace is not None:
            trace.used_area_coords = True
            trace.add(TraceStep(
                "area-coordinates", clause,
                f"area coordinates ({frame}): numerator {form.as_rexpr().num}",
                expr=form.as_rexpr(),
            ))
        invariant = is_scale_invariant(e)
        if form.n0.is_zero() and form.n1.is_zero():
            if invariant:
                return self._done(trace, clause, _ZeroResult(_Zero.ZERO))
            return _ZeroResult(_Zero.UNKNOWN, e, "statement is not scale invariant; a unit frame is not general")
        if form.n1.is_zero() or not (form.at_orientation(1).is_zero() or form.at_orientation(-1).is_zero()):
            return self._done(trace, clause, _ZeroResult(_Zero.NONZERO, e, "nonzero in independent area coordinates"))
        return _ZeroResult(_Zero.UNKNOWN, e, f"odd power of {frame.s_atom} decides the statement")

    @staticmethod
    def _done(trace: Optional[ProofTrace], clause: int, res: _ZeroResult) -> _ZeroResult:
        if trace is not None:
            word = "zero polynomial" if res.status is _Zero.ZERO else f"not zero ({res.reason})"
            trace.add(TraceStep("zero-test", clause, f"zero test: {word}"))
        return res

    # -- clauses -----------------------------------------------------------
    def counterexample(self, c: Construction, clause: Clause) -> Optional[NumericModel]:
        conj = Conjecture((clause,))
        return oracle.find_counterexample(c, conj, self.options.seed, self.options.oracle_samples)

    def prove_clause(self, c: Construction, clause: Clause, idx: int, trace: ProofTrace) -> Verdict:
        if clause.rel.is_inequality or et.has_sqrt(clause.lhs) or et.has_sqrt(clause.rhs):
            from areamethod.inequality import decide_clause

            return decide_clause(self, c, clause, idx, trace)
        e = c.lower(clause.lhs) - c.lower(clause.rhs)
        res = self.zero_test(c, e, trace, idx)
        return self.verdict_from_zero(c, clause, res)

    def verdict_from_zero(self, c: Construction, clause: Clause, res: _ZeroResult) -> Verdict:
        residual = str(res.residual) if res.residual is not None else None
        if res.status is _Zero.NOT_REDUCED:
            return Verdict(Outcome.NOT_REDUCED, residual=residual, reason=res.reason)
        if clause.rel is Relation.EQ:
            if res.status is _Zero.ZERO:
                return Verdict(Outcome.PROVED)
        elif clause.rel is Relation.NE:
            if res.status is _Zero.NONZERO:
                return Verdict(Outcome.PROVED)
        cx = self.counterexample(c, clause)
        if cx is not None:
            return Verdict(Outcome.DISPROVED, counterexample=cx)
        reason = res.reason or "no counterexample found"
        return Verdict(Outcome.UNKNOWN, residual=residual, reason=reason)


def _generically_nonzero_monomial(e: RationalExpr) -> bool:
    """A monomial numerator over independent quantities vanishes only on a degenerate set."""
    (mono, _), = e.num.terms.items()
    return all(a.kind != DIST_RATIO for a, _ in mono)


# -- public API ----------------------------------------------------------

def check_construction(c: Construction, options: ProverOptions = ProverOptions(), trace: Optional[ProofTrace] = None,
                       session: Optional[Session] = None) -> list:
    """Run every ndg check; raises ConstructionInconsistent on the first violated ndg."""
    session = session or Session(options)
    checks = validate(c, session.negation_provable)
    if trace is not None:
        for chk in checks:
            trace.ndg_checks.append(NdgRecord(str(chk.step), str(chk.ndg), chk.status.value, chk.prefix_order))
    for chk in checks:
        if chk.status is NdgStatus.INCONSISTENT:
            raise ConstructionInconsistent(chk.step, chk.ndg)
    return checks


def prove(c: Construction, conj: Conjecture, options: ProverOptions = ProverOptions()) -> tuple[Verdict, ProofTrace]:
    """Decide a conjecture over a construction; returns the verdict and its trace."""
    start = time.monotonic()
    deadline = start + options.max_ms / 1000 if options.max_ms else None
    session = Session(options, deadline)
    trace = ProofTrace(conjecture=str(conj), construction=str(c))
    try:
        if not options.skip_ndg:
            check_construction(c, options, trace, session)
        verdict = _prove_conjunction(session, c, conj, trace)
    except _Timeout:
        verdict = Verdict(Outcome.UNKNOWN, reason=f"time limit of {options.max_ms} ms exceeded")
    if options.timing:
        trace.elapsed_ms = round((time.monotonic() - start) * 1000, 3)
    return verdict, trace


def _prove_conjunction(session: Session, c: Construction, conj: Conjecture, trace: ProofTrace) -> Verdict:
    verdicts = []
    for idx, clause in enumerate(conj.clauses):
        v = session.prove_clause(c, clause, idx, trace)
        if v.outcome is Outcome.DISPROVED:
            return v
        verdicts.append(v)
    for v in verdicts:
        if not v.proved:
            return v
    return Verdict(Outcome.PROVED)


def prove_negation_unprovable(c: Construction, conj: Conjecture, options: ProverOptions = ProverOptions()) -> bool:
    """True iff ``conj`` is not provable (the ndg it negates is satisfied)."""
    opts = ProverOptions(area_coords="auto", oracle_samples=options.oracle_samples, seed=options.seed, skip_ndg=True)
    verdict, _ = prove(c, conj, opts)
    return not verdict.proved
