"""Rendering proof traces as text or as a versioned JSON document."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from areamethod.prover import Outcome, Verdict
from areamethod.trace import ProofTrace

SCHEMA = "areamethod.trace/1"


@dataclass(frozen=True)
class StepRecord:
    kind: str
    clause: int
    text: str
    point: Optional[str] = None
    lemma: Optional[str] = None
    branch: Optional[str] = None
    before: Optional[str] = None
    after: Optional[str] = None


@dataclass(frozen=True)
class NdgRow:
    step: str
    ndg: str
    status: str
    prefix_order: int


@dataclass(frozen=True)
class TraceDocument:
    theorem: str
    construction: str
    verdict: str
    counterexample: Optional[dict] = None
    residual: Optional[str] = None
    reason: str = ""
    ndg_checks: tuple[NdgRow, ...] = ()
    steps: tuple[StepRecord, ...] = ()
    used_area_coords: bool = False
    elapsed_ms: Optional[float] = None
    name: str = ""
    schema: str = field(default=SCHEMA)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ndg_checks"] = [asdict(r) for r in self.ndg_checks]
        d["steps"] = [asdict(s) for s in self.steps]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> TraceDocument:
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported trace schema {d.get('schema')!r}")
        d = dict(d)
        d["ndg_checks"] = tuple(NdgRow(**r) for r in d["ndg_checks"])
        d["steps"] = tuple(StepRecord(**s) for s in d["steps"])
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> TraceDocument:
        return cls.from_dict(json.loads(text))


def build_document(trace: ProofTrace, verdict: Verdict, name: str = "") -> TraceDocument:
    steps = []
    for s in trace.steps:
        steps.append(StepRecord(
            kind=s.kind,
            clause=s.clause,
            text=s.text,
            point=s.point,
            lemma=f"EL{s.lemma}" if s.lemma is not None else None,
            branch=s.branch,
            before=str(s.atom) if s.atom is not None else None,
            after=str(s.replacement) if s.replacement is not None else None,
        ))
    cx = verdict.counterexample.to_dict() if verdict.counterexample is not None else None
    return TraceDocument(
        theorem=trace.conjecture,
        construction=trace.construction,
        verdict=verdict.outcome.value,
        counterexample=cx,
        residual=verdict.residual,
        reason=verdict.reason,
        ndg_checks=tuple(NdgRow(r.step, r.ndg, r.status, r.prefix_order) for r in trace.ndg_checks),
        steps=tuple(steps),
        used_area_coords=trace.used_area_coords,
        elapsed_ms=trace.elapsed_ms,
        name=name,
    )


def render_text(doc: TraceDocument) -> str:
    out = []
    if doc.name:
        out.append(f"theorem {doc.name}")
    out.append(f"goal: {doc.theorem}")
    out.append(f"construction: {doc.construction}")
    if doc.ndg_checks:
        out.append("ndg checks:")
        for r in doc.ndg_checks:
            out.append(f"  {r.step}: {r.ndg} ... {r.status}")
    if doc.steps:
        out.append("proof:")
        for s in doc.steps:
            out.append(f"  {s.text}")
    out.append(f"area coordinates: {'yes' if doc.used_area_coords else 'no'}")
    verdict = doc.verdict
    if doc.verdict == Outcome.DISPROVED.value and doc.counterexample:
        pts = ", ".join(f"{n}=({x},{y})" for n, (x, y) in doc.counterexample["points"].items())
        params = ", ".join(f"{n}={v}" for n, v in doc.counterexample["params"].items())
        verdict += f"; counterexample {pts}" + (f"; {params}" if params else "")
    elif doc.residual:
        verdict += f"; residual {doc.residual}"
    if doc.reason and doc.verdict != Outcome.PROVED.value:
        verdict += f" ({doc.reason})"
    out.append(f"verdict: {verdict}")
    if doc.elapsed_ms is not None:
        out.append(f"time: {doc.elapsed_ms} ms")
    return "\n".join(out) + "\n"


def render_trace(trace: ProofTrace, verdict: Verdict, fmt: str = "text", name: str = "") -> str:
    doc = build_document(trace, verdict, name)
    if fmt == "structured":
        return doc.to_json() + "\n"
    if fmt == "text":
        return render_text(doc)
    raise ValueError(f"unknown trace format {fmt!r}")
