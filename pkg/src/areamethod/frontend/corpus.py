"""The bundled theorem corpus."""

from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from areamethod.frontend.parser import SourceFile, parse
from areamethod.prover import ProverOptions, Verdict, prove
from areamethod.trace import ProofTrace


@dataclass(frozen=True)
class Entry:
    name: str
    filename: str
    area_coords: bool  # whether the method needs area coordinates for it


THEOREMS: tuple[Entry, ...] = (
    Entry("Ceva's Theorem", "ceva.geo", False),
    Entry("Desargues's Theorem", "desargues.geo", False),
    Entry("Euler Line", "euler_line.geo", True),
    Entry("Gauss-Newton Line", "gauss_newton.geo", True),
    Entry("Heron's Formula", "heron.geo", True),
    Entry("Intercept Theorem", "intercept.geo", False),
    Entry("Midpoint Theorem", "midpoint.geo", False),
    Entry("Menelaus's Theorem", "menelaus.geo", False),
    Entry("Pappus's Line Theorem", "pappus.geo", False),
    Entry("Pythagorean Theorem", "pythagorean.geo", False),
    Entry("Triangle Inequality", "triangle_inequality.geo", True),
)


def read_source(filename: str) -> str:
    return resources.files("areamethod.frontend").joinpath("corpus", filename).read_text(encoding="utf-8")


def load(filename: str) -> SourceFile:
    return parse(read_source(filename))


def select(pattern: Optional[str] = None) -> list[Entry]:
    if not pattern:
        return list(THEOREMS)
    p = pattern.lower()
    return [e for e in THEOREMS if p in e.name.lower() or p in e.filename.lower()]


@dataclass
class Result:
    entry: Entry
    source: SourceFile
    verdict: Verdict
    trace: ProofTrace
    wall_ms: float


def run_entry(entry: Entry, options: ProverOptions) -> Result:
    src = load(entry.filename)
    start = time.monotonic()
    verdict, trace = prove(src.construction, src.conjecture, options)
    wall = (time.monotonic() - start) * 1000
    return Result(entry, src, verdict, trace, wall)


def format_table(results: list[Result]) -> str:
    rows = [("Theorem", "Area Coordinates", "Time (ms)", "Verdict")]
    for r in results:
        rows.append((
            r.entry.name,
            "yes" if r.trace.used_area_coords else "no",
            f"{r.wall_ms:.1f}",
            r.verdict.outcome.value,
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = []
    for k, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
