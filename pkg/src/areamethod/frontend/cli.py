"""Command-line interface.

Exit codes: 0 proved, 1 disproved, 2 not reduced or unknown, 3 construction
error, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from areamethod import oracle
from areamethod.errors import (
    ConstructionError,
    DegenerateDenominator,
    ParseError,
)
from areamethod.frontend import corpus
from areamethod.frontend.parser import SourceFile, parse_file
from areamethod.frontend.render import SCHEMA, build_document, render_trace
from areamethod.prover import Outcome, ProverOptions, check_construction, prove
from areamethod.trace import ProofTrace

EXIT_PROVED = 0
EXIT_DISPROVED = 1
EXIT_UNDECIDED = 2
EXIT_CONSTRUCTION = 3
EXIT_PARSE = 4

_EXIT_FOR = {
    Outcome.PROVED: EXIT_PROVED,
    Outcome.DISPROVED: EXIT_DISPROVED,
    Outcome.NOT_REDUCED: EXIT_UNDECIDED,
    Outcome.UNKNOWN: EXIT_UNDECIDED,
}


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{name} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="areamethod", description="Area-method prover for plane geometry.")
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("prove", help="prove the goal of a construction file")
    pr.add_argument("file")
    pr.add_argument("--area-coords", choices=("auto", "never", "always"), default=None)
    pr.add_argument("--trace", choices=("text", "structured"), default="text")
    pr.add_argument("--oracle-check", type=int, default=0, metavar="N",
                    help="confirm a Proved verdict on N random realizations")
    pr.add_argument("--seed", type=int, default=None)
    pr.add_argument("--max-ms", type=int, default=None)
    pr.add_argument("--timing", action="store_true", help="include wall time in the trace")

    ck = sub.add_parser("check", help="run the non-degeneracy checks only")
    ck.add_argument("file")

    cp = sub.add_parser("corpus", help="bundled theorems")
    cp_sub = cp.add_subparsers(dest="corpus_command", required=True)
    run = cp_sub.add_parser("run", help="prove every bundled theorem")
    run.add_argument("--filter", default=None)
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--trace", choices=("text", "structured"), default=None)
    run.add_argument("--area-coords", choices=("auto", "never", "always"), default=None)
    return p


def _options(args, src: Optional[SourceFile] = None) -> ProverOptions:
    file_opts = src.options if src is not None else {}
    seed = args.seed if getattr(args, "seed", None) is not None else _env_int("AREAMETHOD_SEED")
    if seed is None:
        seed = int(file_opts.get("seed", 0))
    samples = _env_int("AREAMETHOD_ORACLE_SAMPLES")
    if samples is None:
        samples = int(file_opts.get("oracle_samples", 100))
    area = getattr(args, "area_coords", None) or file_opts.get("area_coords", "auto")
    return ProverOptions(
        area_coords=area,
        oracle_samples=samples,
        seed=seed,
        max_ms=getattr(args, "max_ms", None),
        timing=getattr(args, "timing", False),
    )


def _load(path: str) -> SourceFile:
    return parse_file(path)


def cmd_prove(args, out) -> int:
    src = _load(args.file)
    opts = _options(args, src)
    verdict, trace = prove(src.construction, src.conjecture, opts)
    out.write(render_trace(trace, verdict, args.trace))
    if args.oracle_check and verdict.proved:
        ok, tried = oracle.confirm(src.construction, src.conjecture, opts.seed, args.oracle_check)
        out.write(f"oracle check: {ok}/{tried} evaluable samples confirm the statement\n")
        if ok != tried:
            return EXIT_UNDECIDED
    return _EXIT_FOR[verdict.outcome]


def cmd_check(args, out) -> int:
    src = _load(args.file)
    trace = ProofTrace(conjecture=str(src.conjecture), construction=str(src.construction))
    try:
        check_construction(src.construction, _options(args, src), trace)
    finally:
        for r in trace.ndg_checks:
            out.write(f"{r.step}: {r.ndg} ... {r.status}\n")
    out.write("construction is consistent\n")
    return 0


def cmd_corpus(args, out, err) -> int:
    entries = corpus.select(args.filter)
    opts = _options(args)
    results = [corpus.run_entry(e, opts) for e in entries]
    if args.trace == "structured":
        docs = [build_document(r.trace, r.verdict, r.entry.name).to_dict() for r in results]
        out.write(json.dumps({"schema": SCHEMA, "theorems": docs}, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
        err.write(corpus.format_table(results))
    else:
        if args.trace == "text":
            for r in results:
                out.write(render_trace(r.trace, r.verdict, "text", r.entry.name) + "\n")
        out.write(corpus.format_table(results))
    return 0 if all(r.verdict.proved for r in results) else EXIT_UNDECIDED


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "prove":
            return cmd_prove(args, out)
        if args.command == "check":
            return cmd_check(args, out)
        return cmd_corpus(args, out, err)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except (ConstructionError, DegenerateDenominator) as exc:
        err.write(f"construction error: {exc}\n")
        return EXIT_CONSTRUCTION
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
