"""Constructions as ordered lists of elementary construction steps (ECS1-ECS5).

A construction is immutable; :meth:`Construction.append` returns a new one.
Each step knows its non-degeneracy conditions, and :func:`validate` checks
them by asking a prover whether their negations are provable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Union

from areamethod.algebra import exprtree as et
from areamethod.algebra.quantities import Point
from areamethod.algebra.rational import RationalExpr
from areamethod.errors import (
    ConstructionError,
    ConstructionInconsistent,
    DuplicatePoint,
    UnknownPoint,
)


@dataclass(frozen=True)
class FreePoints:
    """ECS1: unconstrained points."""

    points: tuple[str, ...]
    kind = 1

    @property
    def new_points(self) -> tuple[str, ...]:
        return self.points

    @property
    def dependencies(self) -> tuple[str, ...]:
        return ()

    def __str__(self) -> str:
        return f"ECS1({','.join(self.points)})"


@dataclass(frozen=True)
class Intersection:
    """ECS2: Y is the intersection of line(U,V) and line(P,Q)."""

    y: str
    u: str
    v: str
    p: str
    q: str
    kind = 2

    @property
    def new_points(self) -> tuple[str, ...]:
        return (self.y,)

    @property
    def dependencies(self) -> tuple[str, ...]:
        return (self.u, self.v, self.p, self.q)

    def __str__(self) -> str:
        return f"ECS2({self.y},{self.u},{self.v},{self.p},{self.q})"


@dataclass(frozen=True)
class Foot:
    """ECS3: Y is the foot of the perpendicular from P to line(U,V)."""

    y: str
    p: str
    u: str
    v: str
    kind = 3

    @property
    def new_points(self) -> tuple[str, ...]:
        return (self.y,)

    @property
    def dependencies(self) -> tuple[str, ...]:
        return (self.p, self.u, self.v)

    def __str__(self) -> str:
        return f"ECS3({self.y},{self.p},{self.u},{self.v})"


@dataclass(frozen=True)
class OnParallel:
    """ECS4: Y on the parallel to line(U,V) through W with WY/UV = r."""

    y: str
    w: str
    u: str
    v: str
    r: object  # ExprTree
    kind = 4

    @property
    def new_points(self) -> tuple[str, ...]:
        return (self.y,)

    @property
    def dependencies(self) -> tuple[str, ...]:
        return (self.w, self.u, self.v, *sorted(et.point_names(self.r)))

    def __str__(self) -> str:
        return f"ECS4({self.y},{self.w},{self.u},{self.v},{et.format_expr(self.r)})"


@dataclass(frozen=True)
class OnPerpendicular:
    """ECS5: Y on the perpendicular to line(U,V) at U with 4 S[U,V,Y] = r P[U,V,U]."""

    y: str
    u: str
    v: str
    r: object  # ExprTree
    kind = 5

    @property
    def new_points(self) -> tuple[str, ...]:
        return (self.y,)

    @property
    def dependencies(self) -> tuple[str, ...]:
        return (self.u, self.v, *sorted(et.point_names(self.r)))

    def __str__(self) -> str:
        return f"ECS5({self.y},{self.u},{self.v},{et.format_expr(self.r)})"


Step = Union[FreePoints, Intersection, Foot, OnParallel, OnPerpendicular]


@dataclass(frozen=True)
class PointRecord:
    """What the construction knows about one point."""

    point: Point
    step: Step
    dependencies: tuple[str, ...]
    parameters: tuple[str, ...]

    @property
    def ecs(self) -> int:
        return self.step.kind

    @property
    def order(self) -> int:
        return self.point.order


@dataclass(frozen=True)
class Construction:
    steps: tuple = ()
    parameters: tuple[str, ...] = ()
    frame_point: str | None = None
    _records: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    # -- building -----------------------------------------------------
    @classmethod
    def from_steps(cls, steps, parameters=()) -> Construction:
        c = cls(parameters=tuple(parameters))
        for s in steps:
            c = c.append(s)
        return c

    def declare_parameter(self, name: str, position=None) -> Construction:
        if name in self._records or name in self.parameters:
            raise DuplicatePoint(f"name {name!r} is already declared", position)
        return Construction(self.steps, self.parameters + (name,), self.frame_point, dict(self._records))

    def append(self, step: Step, position=None) -> Construction:
        """Return a new construction with ``step`` appended (append_step)."""
        if not self.steps and step.kind != 1:
            missing = step.dependencies[0] if step.dependencies else "?"
            raise UnknownPoint(f"point {missing!r} used before it is introduced", position)
        for name in step.dependencies:
            if name not in self._records:
                raise UnknownPoint(f"point {name!r} used before it is introduced", position)
        params = ()
        if isinstance(step, (OnParallel, OnPerpendicular)):
            params = tuple(sorted(et.parameter_names(step.r)))
            for pname in params:
                if pname not in self.parameters:
                    raise UnknownPoint(f"parameter {pname!r} is not declared", position)
        records = dict(self._records)
        order = len(records)
        seen = set()
        for name in step.new_points:
            if name in records or name in self.parameters or name in seen:
                raise DuplicatePoint(f"point {name!r} is introduced twice", position)
            seen.add(name)
            order += 1
            records[name] = PointRecord(Point(name, order), step, step.dependencies, params)
        return Construction(self.steps + (step,), self.parameters, self.frame_point, records)

    # -- lookup -------------------------------------------------------
    def __contains__(self, name: str) -> bool:
        return name in self._records

    def __len__(self) -> int:
        return len(self._records)

    def record(self, name: str) -> PointRecord:
        try:
            return self._records[name]
        except KeyError:
            raise UnknownPoint(f"point {name!r} is not part of the construction") from None

    def point(self, name: str) -> Point:
        return self.record(name).point

    def points(self) -> list[Point]:
        return [r.point for r in self._records.values()]

    def records(self) -> Iterator[PointRecord]:
        return iter(self._records.values())

    def free_points(self) -> list[Point]:
        return [r.point for r in self._records.values() if r.ecs == 1]

    def is_free(self, name: str) -> bool:
        return self.record(name).ecs == 1

    @property
    def max_order(self) -> int:
        return len(self._records)

    def resolve(self, name: str) -> Point:
        if name in self.parameters:
            raise UnknownPoint(f"{name!r} is a parameter, not a point")
        return self.point(name)

    def lower(self, tree) -> RationalExpr:
        """Canonicalize an expression tree against this construction."""
        for pname in et.parameter_names(tree):
            if pname not in self.parameters:
                raise UnknownPoint(f"parameter {pname!r} is not declared")
        return et.lower(tree, self.resolve)

    def lowered_parameter(self, step: OnParallel | OnPerpendicular) -> RationalExpr:
        return self.lower(step.r)

    def prefix(self, k: int) -> Construction:
        """Sub-construction of every point with order <= k."""
        if not 1 <= k <= self.max_order:
            raise ConstructionError(f"prefix order {k} out of range 1..{self.max_order}")
        c = Construction(parameters=self.parameters)
        for step in self.steps:
            if isinstance(step, FreePoints):
                kept = tuple(n for n in step.points if self._records[n].order <= k)
                if kept:
                    c = c.append(FreePoints(kept) if kept != step.points else step)
            elif self._records[step.y].order <= k:
                c = c.append(step)
        if self.frame_point is not None and self.frame_point in c:
            c = Construction(c.steps, c.parameters, self.frame_point, c._records)
        return c

    def with_frame(self, step: OnPerpendicular) -> Construction:
        c = self.append(step)
        return Construction(c.steps, c.parameters, step.y, c._records)

    def fresh_name(self, base: str) -> str:
        name, i = base, 0
        while name in self._records or name in self.parameters:
            i += 1
            name = f"{base}{i}"
        return name

    @property
    def key(self) -> tuple:
        return (self.steps, self.parameters, self.frame_point)

    def __str__(self) -> str:
        return "@".join(str(s) for s in reversed(self.steps))


# -- non-degeneracy ----------------------------------------------------

@dataclass(frozen=True)
class NdgCondition:
    """A degenerate situation the construction step must avoid.

    ``lhs = rhs`` is the statement to refute; the step is consistent when
    that statement is not provable.
    """

    lhs: object  # ExprTree
    rhs: object  # ExprTree
    description: str

    def negation_text(self) -> str:
        return f"{et.format_expr(self.lhs)} = {et.format_expr(self.rhs)}"

    def __str__(self) -> str:
        return f"refute {self.negation_text()}"


def _distinct(a: str, b: str) -> NdgCondition:
    return NdgCondition(et.P(a, b, a), et.const(0), f"{a} != {b}")


def ndg_conditions(step: Step) -> list[NdgCondition]:
    if isinstance(step, FreePoints):
        return []
    if isinstance(step, Intersection):
        # S[P,U,V] = S[Q,U,V] also holds whenever U = V or P = Q
        return [
            NdgCondition(
                et.S(step.p, step.u, step.v),
                et.S(step.q, step.u, step.v),
                f"line({step.u},{step.v}) not parallel to line({step.p},{step.q})",
            )
        ]
    if isinstance(step, Foot):
        return [_distinct(step.u, step.v)]
    if isinstance(step, OnParallel):
        return [_distinct(step.u, step.v)]
    if isinstance(step, OnPerpendicular):
        return [_distinct(step.u, step.v)]
    raise TypeError(f"unknown step {step!r}")


class NdgStatus(Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class NdgCheck:
    step: Step
    ndg: NdgCondition
    status: NdgStatus
    prefix_order: int


NegationProvable = Callable[[Construction, NdgCondition], bool]


def step_order(c: Construction, step: Step) -> int:
    return min(c.record(n).order for n in step.new_points)


def validate(c: Construction, negation_provable: NegationProvable, *, stop_at_first: bool = True) -> list[NdgCheck]:
    """Check every ndg of every step against the prefix construction preceding the step."""
    checks: list[NdgCheck] = []
    for step in c.steps:
        conditions = ndg_conditions(step)
        if not conditions:
            continue
        k = step_order(c, step) - 1
        prefix = c.prefix(k)
        for ndg in conditions:
            bad = negation_provable(prefix, ndg)
            status = NdgStatus.INCONSISTENT if bad else NdgStatus.CONSISTENT
            checks.append(NdgCheck(step, ndg, status, k))
            if bad and stop_at_first:
                return checks
    return checks


def ensure_consistent(c: Construction, negation_provable: NegationProvable) -> list[NdgCheck]:
    checks = validate(c, negation_provable)
    for chk in checks:
        if chk.status is NdgStatus.INCONSISTENT:
            raise ConstructionInconsistent(chk.step, chk.ndg)
    return checks
