"""Canonical forms of geometric quantities."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from areamethod.algebra import exprtree as et
from areamethod.algebra.quantities import (
    DIST_RATIO,
    PYTH_DIFF,
    QUAD_DIST,
    SIGNED_AREA,
    Atom,
    Point,
    canonicalize,
    canonicalize_atom,
)
from areamethod.algebra.rational import RationalExpr, expand_pythagoras, rexpr_equal
from areamethod.errors import DegenerateDenominator

from helpers import free, pts

A, B, C, D = pts("A", "B", "C", "D")


def parity(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def test_signed_area_rotation_keeps_sign():
    assert canonicalize_atom(SIGNED_AREA, (C, A, B)) == (1, Atom(SIGNED_AREA, (A, B, C)))


def test_signed_area_swap_flips_sign():
    assert canonicalize_atom(SIGNED_AREA, (A, C, B)) == (-1, Atom(SIGNED_AREA, (A, B, C)))


def test_pyth_diff_with_repeated_neighbour_is_zero():
    assert canonicalize_atom(PYTH_DIFF, (A, A, B)) == (0, None)
    assert canonicalize_atom(PYTH_DIFF, (A, B, B)) == (0, None)


def test_pyth_diff_is_symmetric_in_its_ends():
    assert canonicalize_atom(PYTH_DIFF, (C, B, A)) == canonicalize_atom(PYTH_DIFF, (A, B, C))


def test_pyth_diff_of_a_segment_keeps_lower_point_outside():
    assert canonicalize_atom(PYTH_DIFF, (B, A, B)) == (1, Atom(PYTH_DIFF, (A, B, A)))


def test_quad_dist_is_unordered():
    assert canonicalize_atom(QUAD_DIST, (B, A)) == (1, Atom(QUAD_DIST, (A, B)))
    assert canonicalize_atom(QUAD_DIST, (A, A)) == (0, None)


def test_ratio_sign_rules():
    assert canonicalize_atom(DIST_RATIO, (B, A, C, D)) == (-1, Atom(DIST_RATIO, (A, B, C, D)))
    assert canonicalize_atom(DIST_RATIO, (B, A, D, C)) == (1, Atom(DIST_RATIO, (A, B, C, D)))
    assert canonicalize_atom(DIST_RATIO, (A, B, A, B)) == (1, None)
    assert canonicalize_atom(DIST_RATIO, (A, B, B, A)) == (-1, None)
    assert canonicalize_atom(DIST_RATIO, (A, A, C, D)) == (0, None)


def test_ratio_with_zero_length_denominator_is_an_error():
    with pytest.raises(DegenerateDenominator):
        canonicalize_atom(DIST_RATIO, (A, B, C, C))


def test_points_order_before_names():
    late_a = Point("A", 9)
    assert canonicalize_atom(SIGNED_AREA, (late_a, B, C)) == (1, Atom(SIGNED_AREA, (B, C, late_a)))


def test_quaternary_signed_area():
    c = free("A", "B", "C", "D")
    lhs = c.lower(et.S("A", "C", "B", "D"))
    rhs = c.lower(et.add(et.S("A", "C", "B"), et.S("A", "B", "D")))
    assert rexpr_equal(lhs, rhs)


def test_quaternary_pyth_diff():
    c = free("A", "B", "C", "D")
    lhs = c.lower(et.P("A", "B", "C", "D"))
    rhs = c.lower(et.sub(et.P("A", "B", "D"), et.P("C", "B", "D")))
    assert rexpr_equal(lhs, rhs)


def test_ternary_input_is_not_expanded():
    assert et.expand_quaternary(SIGNED_AREA, ("A", "B", "C")) == et.Quantity(SIGNED_AREA, ("A", "B", "C"))


def test_expand_pythagoras_definition():
    e = RationalExpr.quantity(PYTH_DIFF, (A, B, C))
    out, subs = expand_pythagoras(e)
    d2 = lambda x, y: RationalExpr.quantity(QUAD_DIST, (x, y))  # noqa: E731
    assert rexpr_equal(out, d2(A, B) + d2(B, C) - d2(A, C))
    assert [a for a, _ in subs] == [Atom(PYTH_DIFF, (A, B, C))]


def test_expand_pythagoras_of_a_segment():
    out, _ = expand_pythagoras(RationalExpr.quantity(PYTH_DIFF, (A, B, A)))
    assert rexpr_equal(out, RationalExpr.quantity(QUAD_DIST, (A, B)) * 2)


def test_expand_pythagoras_fixed_point():
    e = RationalExpr.quantity(SIGNED_AREA, (A, B, C)) * 3
    assert expand_pythagoras(e) == (e, [])


point_lists = st.lists(st.sampled_from(pts("A", "B", "C", "D", "E")), min_size=3, max_size=3)


@given(st.permutations([A, B, C]))
def test_signed_area_permutation_parity(perm):
    coeff, atom = canonicalize_atom(SIGNED_AREA, tuple(perm))
    assert atom == Atom(SIGNED_AREA, (A, B, C))
    assert coeff == parity([p.order for p in perm])


@given(point_lists, st.sampled_from([SIGNED_AREA, PYTH_DIFF]))
def test_canonicalization_is_idempotent(points, kind):
    coeff, atom = canonicalize_atom(kind, tuple(points))
    if atom is not None:
        assert canonicalize(atom) == (1, atom)
    else:
        assert coeff == 0


def test_every_permutation_of_four_ratio_points():
    for perm in permutations((A, B, C, D)):
        a, b, c, d = perm
        coeff, atom = canonicalize_atom(DIST_RATIO, perm)
        assert atom.points[0].order < atom.points[1].order
        assert atom.points[2].order < atom.points[3].order
        expected = (1 if a.order < b.order else -1) * (1 if c.order < d.order else -1)
        assert coeff == Fraction(expected)
