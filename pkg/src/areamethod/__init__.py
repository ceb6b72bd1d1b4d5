"""Area-method theorem prover for plane Euclidean geometry.

Typical use::

    from areamethod import parse, prove

    src = parse(open("intercept.geo").read())
    verdict, trace = prove(src.construction, src.conjecture)
"""

from areamethod.conjecture import Clause, Conjecture, Relation
from areamethod.construction import (
    Construction,
    Foot,
    FreePoints,
    Intersection,
    OnParallel,
    OnPerpendicular,
    ndg_conditions,
    validate,
)
from areamethod.frontend.parser import SourceFile, parse
from areamethod.prover import Outcome, ProverOptions, Verdict, prove
from areamethod.trace import ProofTrace

__all__ = [
    "Clause",
    "Conjecture",
    "Construction",
    "Foot",
    "FreePoints",
    "Intersection",
    "OnParallel",
    "OnPerpendicular",
    "Outcome",
    "ProofTrace",
    "ProverOptions",
    "Relation",
    "SourceFile",
    "Verdict",
    "ndg_conditions",
    "parse",
    "prove",
    "validate",
]
