"""End-to-end verdicts, traces and the generic-truth semantics."""

import pytest

from areamethod import oracle
from areamethod.algebra import exprtree as et
from areamethod.algebra.rational import rexpr_equal
from areamethod.conjecture import Clause, Conjecture, Relation
from areamethod.construction import Construction, FreePoints
from areamethod.errors import ConstructionInconsistent
from areamethod.frontend.parser import parse
from areamethod.frontend.predicates import expand_predicate
from areamethod.prover import Outcome, ProverOptions, prove, prove_negation_unprovable
from areamethod.trace import reduced_expression, replay

from helpers import intercept

INTERCEPT_GOAL = Conjecture.equation(et.ratio("S", "A", "A", "B"), et.ratio("S", "C", "C", "D"))
TRIANGLE = Construction.from_steps([FreePoints(("A", "B", "C"))])


def run(text, **opts):
    src = parse(text)
    return prove(src.construction, src.conjecture, ProverOptions(**opts))


def test_intercept_is_proved_without_area_coordinates():
    verdict, trace = prove(intercept(), INTERCEPT_GOAL)
    assert verdict.outcome is Outcome.PROVED
    assert not trace.used_area_coords
    order = [s.point for s in trace.eliminations()]
    # S is eliminated completely before D
    assert order == sorted(order, key=["S", "D"].index) and set(order) == {"S", "D"}


def test_collinearity_of_free_points_is_disproved():
    goal = expand_predicate("collinear", [["A", "B", "C"]])
    verdict, _ = prove(TRIANGLE, goal)
    assert verdict.outcome is Outcome.DISPROVED
    m = verdict.counterexample
    assert not oracle.check(goal, m)
    assert oracle.satisfies_ndgs(TRIANGLE, m)


def test_heron_needs_area_coordinates():
    verdict, trace = run("""
        points A B C
        prove 16 * S[A,B,C]^2 = 4 * d2(A,B) * d2(B,C) - (d2(A,B) + d2(B,C) - d2(A,C))^2
    """)
    assert verdict.proved and trace.used_area_coords


def test_heron_without_area_coordinates_stays_open():
    verdict, trace = run("""
        points A B C
        prove 16 * S[A,B,C]^2 = 4 * d2(A,B) * d2(B,C) - (d2(A,B) + d2(B,C) - d2(A,C))^2
    """, area_coords="never")
    assert not verdict.proved and not trace.used_area_coords


def test_area_coordinates_always():
    _, trace = prove(intercept(), INTERCEPT_GOAL, ProverOptions(area_coords="always"))
    assert trace.used_area_coords


def test_inconsistent_construction_is_rejected():
    with pytest.raises(ConstructionInconsistent) as info:
        prove(intercept(1), INTERCEPT_GOAL)
    assert "S[C,A,B] = S[D,A,B]" in str(info.value)


def test_trace_replay_reaches_the_reduced_expression():
    _, trace = prove(intercept(), INTERCEPT_GOAL)
    end = reduced_expression(trace)
    assert end is not None and rexpr_equal(replay(trace), end)
    assert end.point_names() <= {"A", "B", "C"}


def test_replay_of_an_area_coordinate_proof():
    src = parse("""
        points A B C
        D := foot(C; A,B)
        prove d2(A,C) = d2(A,D) + d2(D,C)
    """)
    verdict, trace = prove(src.construction, src.conjecture)
    assert verdict.proved
    assert rexpr_equal(replay(trace), reduced_expression(trace))


def test_negated_ndg_is_unprovable_for_free_points():
    goal = Conjecture.equation(et.S("A", "B", "C"), et.const(0))
    assert prove_negation_unprovable(TRIANGLE, goal)


def test_negated_ndg_of_degenerate_ratio_is_provable():
    c = intercept(1)
    goal = Conjecture.equation(et.S("C", "A", "B"), et.S("D", "A", "B"))
    assert not prove_negation_unprovable(c.prefix(4), goal)


def test_disequality_is_proved_when_generically_true():
    verdict, _ = prove(TRIANGLE, Conjecture.equation(et.S("A", "B", "C"), et.const(0), Relation.NE))
    assert verdict.proved


def test_disequality_of_an_identity_is_disproved():
    goal = Conjecture.equation(et.S("A", "B", "C"), et.S("B", "C", "A"), Relation.NE)
    verdict, _ = prove(TRIANGLE, goal)
    assert verdict.outcome is Outcome.DISPROVED
    assert not oracle.check(goal, verdict.counterexample)


def test_conjunction_fails_on_its_first_false_clause():
    goal = Conjecture((
        Clause(et.S("A", "B", "C"), Relation.EQ, et.S("B", "C", "A")),
        Clause(et.S("A", "B", "C"), Relation.EQ, et.const(0)),
    ))
    verdict, _ = prove(TRIANGLE, goal)
    assert verdict.outcome is Outcome.DISPROVED


def test_ratio_over_free_points_is_not_reduced():
    src = parse("""
        points A B C D
        prove ratio(A,B;C,D) = 1
    """)
    verdict, _ = prove(src.construction, src.conjecture, ProverOptions(skip_ndg=True))
    assert verdict.outcome is Outcome.NOT_REDUCED
    assert "ratio" in verdict.residual


def test_time_limit_gives_unknown():
    src = parse("""
        points A B C
        prove 16 * S[A,B,C]^2 = 4 * d2(A,B) * d2(B,C) - (d2(A,B) + d2(B,C) - d2(A,C))^2
    """)
    verdict, _ = prove(src.construction, src.conjecture, ProverOptions(max_ms=1e-9))
    assert verdict.outcome is Outcome.UNKNOWN and "time limit" in verdict.reason


def test_timing_is_opt_in():
    _, trace = prove(intercept(), INTERCEPT_GOAL)
    assert trace.elapsed_ms is None
    _, trace = prove(intercept(), INTERCEPT_GOAL, ProverOptions(timing=True))
    assert trace.elapsed_ms is not None and trace.elapsed_ms >= 0


def test_invalid_area_coordinate_mode():
    with pytest.raises(ValueError):
        ProverOptions(area_coords="sometimes")
