"""The inequality engine: syntactic squares, bounded squaring, oracle refutation."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from areamethod import oracle
from areamethod.algebra import exprtree as et
from areamethod.conjecture import Clause, Conjecture, Relation
from areamethod.construction import Construction, FreePoints
from areamethod.prover import Outcome, prove

TRIANGLE = Construction.from_steps([FreePoints(("A", "B", "C"))])


def decide(lhs, rel, rhs, c=TRIANGLE):
    return prove(c, Conjecture((Clause(lhs, rel, rhs),)))


def test_squared_distance_is_nonnegative():
    verdict, _ = decide(et.d2("A", "B"), Relation.GE, et.const(0))
    assert verdict.proved


def test_triangle_inequality():
    verdict, trace = decide(et.add(et.dist("A", "B"), et.dist("B", "C")), Relation.GE, et.dist("A", "C"))
    assert verdict.proved and trace.used_area_coords
    assert any(s.kind == "inequality" for s in trace.steps)


def test_reversed_triangle_inequality_is_disproved():
    goal = Conjecture((Clause(et.add(et.dist("A", "B"), et.dist("B", "C")), Relation.LT, et.dist("A", "C")),))
    verdict, _ = prove(TRIANGLE, goal)
    assert verdict.outcome is Outcome.DISPROVED
    assert not oracle.check(goal, verdict.counterexample)


def test_signed_area_has_no_sign():
    goal = Conjecture((Clause(et.S("A", "B", "C"), Relation.GT, et.const(0)),))
    verdict, _ = prove(TRIANGLE, goal)
    assert verdict.outcome is Outcome.DISPROVED
    assert oracle.signed_area(*(verdict.counterexample[n] for n in "ABC")) <= 0


def test_square_of_an_area_is_nonnegative():
    verdict, _ = decide(et.mul(et.S("A", "B", "C"), et.S("A", "B", "C")), Relation.GE, et.const(0))
    assert verdict.proved


def test_strict_inequality_holds_generically():
    # a nondegenerate triangle has positive squared sides
    verdict, _ = decide(et.d2("A", "B"), Relation.GT, et.const(0))
    assert verdict.proved


def test_false_lower_bound_is_disproved():
    verdict, _ = decide(et.d2("A", "B"), Relation.GE, et.d2("A", "C"))
    assert verdict.outcome is Outcome.DISPROVED


def test_heron_product_identity_in_coordinates():
    # 4 AB^2 BC^2 - P_ABC^2 = 16 S_ABC^2, checked by brute-force expansion
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = [(Fraction(rng.randint(-50, 50), rng.randint(1, 9)), Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
                   for _ in range(3)]
        lhs = 4 * oracle.quad_dist(a, b) * oracle.quad_dist(b, c) - oracle.pyth_diff(a, b, c) ** 2
        assert lhs == 16 * oracle.signed_area(a, b, c) ** 2


@given(st.integers(0, 10 ** 6))
@settings(max_examples=50, deadline=None)
def test_proved_triangle_inequality_holds_on_samples(seed):
    m = oracle.realize(TRIANGLE, seed)
    goal = Conjecture((Clause(et.add(et.dist("A", "B"), et.dist("B", "C")), Relation.GE, et.dist("A", "C")),))
    assert oracle.check(goal, m)
