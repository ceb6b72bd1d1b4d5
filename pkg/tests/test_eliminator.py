"""Point elimination on the intercept construction and friends."""

from fractions import Fraction

import pytest

from areamethod.algebra import exprtree as et
from areamethod.algebra.quantities import canonicalize_atom
from areamethod.algebra.rational import RationalExpr, rexpr_equal
from areamethod.construction import Construction, Foot, FreePoints, Intersection, OnPerpendicular
from areamethod.eliminator import (
    Shape,
    classify,
    eliminate_point,
    find_target_point,
    lemma_for,
    side_condition_holds,
)
from areamethod.errors import DegenerateDenominator, UnsupportedShape

from helpers import free, intercept


def atom_of(c, kind, *names):
    return canonicalize_atom(kind, tuple(c.point(n) for n in names))[1]


def lowered(c, tree):
    return c.lower(tree)


def test_target_point_of_the_intercept_goal():
    c = intercept()
    e = lowered(c, et.sub(et.ratio("S", "A", "A", "B"), et.ratio("S", "C", "C", "D")))
    assert find_target_point(e, c).name == "S"


def test_target_point_after_eliminating_s():
    c = intercept()
    e = lowered(c, et.sub(
        et.div(et.S("A", "C", "D"), et.sub(et.S("A", "B", "C"), et.S("A", "B", "D"))),
        et.div(et.S("A", "B", "C"), et.sub(et.S("A", "C", "D"), et.S("B", "C", "D"))),
    ))
    assert find_target_point(e, c).name == "D"


def test_no_target_over_free_points():
    c = intercept()
    assert find_target_point(lowered(c, et.S("A", "B", "C")), c) is None


def test_classify_linear_area():
    c = intercept()
    pat = classify(atom_of(c, "S", "A", "B", "S"), c.point("S"))
    assert pat.shape is Shape.LINEAR_S
    assert [p.name for p in pat.points] == ["A", "B"]


def test_classify_ratio_with_y_first():
    c = intercept()
    pat = classify(atom_of(c, "ratio", "S", "A", "A", "B"), c.point("S"))
    # canonical ratio(A,S;A,B) is -(SA/AB); the pattern is AY/CD with coefficient +1
    assert pat.shape is Shape.RATIO_Y
    assert [p.name for p in pat.points] == ["A", "A", "B"]
    assert pat.coeff == 1


def test_classify_quadratic_p():
    c = intercept()
    pat = classify(atom_of(c, "P", "A", "S", "B"), c.point("S"))
    assert pat.shape is Shape.QUADRATIC_P


def test_side_condition_degenerate_is_true(session):
    c = free("A", "B")
    assert side_condition_holds(lowered(c, et.S("A", "A", "B")), c, session.provable_zero)


def test_side_condition_on_free_points_is_false(session):
    c = free("A", "U", "V")
    assert not side_condition_holds(lowered(c, et.S("A", "U", "V")), c, session.provable_zero)


def test_intercept_uses_the_on_line_branch(session):
    c = intercept()
    app, _ = lemma_for(atom_of(c, "ratio", "S", "A", "A", "B"), c.point("S"), c, session.provable_zero)
    assert app.lemma == 1 and app.branch == "A on AB"


def eliminate(c, tree, y, session):
    e, apps, _ = eliminate_point(lowered(c, tree), c.point(y), c, session.provable_zero)
    return e, apps


def test_parallel_point_areas(session):
    c = intercept()
    r = RationalExpr.quantity("param", name="r")
    abc = lowered(c, et.S("A", "B", "C"))
    e, apps = eliminate(c, et.S("A", "B", "D"), "D", session)
    assert rexpr_equal(e, r * abc) and apps[0].lemma == 7
    e, _ = eliminate(c, et.S("A", "C", "D"), "D", session)
    assert rexpr_equal(e, -abc)
    e, _ = eliminate(c, et.S("B", "C", "D"), "D", session)
    assert rexpr_equal(e, -r * abc)


def test_intercept_ratio_eliminations(session):
    c = intercept()
    S = lambda *p: lowered(c, et.S(*p))  # noqa: E731
    e, _ = eliminate(c, et.ratio("S", "A", "A", "B"), "S", session)
    assert rexpr_equal(e, S("A", "C", "D") / (S("A", "B", "C") - S("A", "B", "D")))
    e, _ = eliminate(c, et.ratio("S", "C", "C", "D"), "S", session)
    assert rexpr_equal(e, S("A", "B", "C") / (S("A", "C", "D") - S("B", "C", "D")))


def test_perpendicular_point_pyth_diff(session):
    c = Construction.from_steps(
        [FreePoints(("A", "B", "P", "Q")), OnPerpendicular("Y", "P", "Q", et.param("r"))],
        parameters=("r",),
    )
    e, apps = eliminate(c, et.P("A", "B", "Y"), "Y", session)
    r = RationalExpr.quantity("param", name="r")
    expected = lowered(c, et.P("A", "B", "P")) - r * 4 * lowered(c, et.S("P", "A", "Q", "B"))
    assert apps[0].lemma == 9
    assert rexpr_equal(e, expected)


def test_result_never_mentions_the_point(session):
    c = intercept()
    tree = et.add(et.P("A", "S", "B"), et.mul(et.S("S", "C", "D"), et.P("S", "B", "C")))
    e, apps = eliminate(c, tree, "S", session)
    assert "S" not in e.point_names()
    assert {a.lemma for a in apps} == {5, 10}


def test_degenerate_lemma_denominator(session):
    c = Construction.from_steps([FreePoints(("A", "B", "C")), Intersection("Y", "A", "B", "A", "B")])
    with pytest.raises(DegenerateDenominator):
        eliminate(c, et.S("A", "C", "Y"), "Y", session)


def test_ratio_of_non_parallel_segments_is_unsupported(session):
    c = Construction.from_steps([FreePoints(("A", "B", "C", "U", "V")), Foot("Y", "A", "U", "V")])
    with pytest.raises(UnsupportedShape):
        eliminate(c, et.ratio("A", "Y", "B", "C"), "Y", session)


def test_free_point_cannot_be_eliminated(session):
    c = intercept()
    with pytest.raises(UnsupportedShape):
        eliminate(c, et.S("A", "B", "C"), "A", session)


def test_trace_text_of_a_lemma(session):
    c = intercept()
    _, apps = eliminate(c, et.S("A", "B", "D"), "D", session)
    assert str(apps[0]) == "eliminate D via EL7 (S[A,B,Y]): S[A,B,D] ⟶ S[A,B,C]*r"


def test_quadratic_pattern_coefficient_of_segment():
    c = intercept()
    pat = classify(atom_of(c, "P", "S", "A", "S"), c.point("S"))
    assert pat.shape is Shape.QUADRATIC_P and pat.coeff == Fraction(1)
