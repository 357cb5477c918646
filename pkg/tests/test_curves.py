from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from reallefschetz.affine import (
    STRUCTURE_REPS,
    affine,
    compose,
    conjugate,
    fixed_components,
    inverse,
    is_real_structure,
    translation,
)
from reallefschetz.curves import (
    Action,
    CurveClass,
    apply_map_to_curve,
    are_twins,
    curve_action,
    dehn_twist,
    equivariant_class,
    invariant_curve_classes,
    is_invariant,
    monodromy_twist,
    offset_transform,
    twin_swap,
)
from reallefschetz.errors import InvariantViolation, NonPrimitive

from conftest import real_codes, real_structures, unimodular
from oracles import brute_action

K2, K1, K0 = STRUCTURE_REPS[2], STRUCTURE_REPS[1], STRUCTURE_REPS[0]
R_HALF = translation((0, F(1, 2)))


def test_curve_normalization():
    assert CurveClass((-1, 0), F(1, 3)) == CurveClass((1, 0), F(2, 3))
    assert CurveClass((0, -1)).vector == (0, 1)
    with pytest.raises(NonPrimitive):
        CurveClass((2, 4))
    with pytest.raises(NonPrimitive):
        CurveClass((0, 0))


def test_dehn_twist_examples():
    assert dehn_twist(CurveClass((1, 0))) == affine([[1, -1], [0, 1]])
    assert dehn_twist(CurveClass((0, 1))) == affine([[1, 0], [1, 1]])
    assert dehn_twist(CurveClass((-2, 3))) == dehn_twist(CurveClass((2, -3)))


@given(real_codes())
@settings(max_examples=100, deadline=None)
def test_twist_fixes_its_geodesic_pointwise(code):
    _, a = code
    t = dehn_twist(a)
    b = a.base_point()
    for k in range(4):
        x = (b[0] + F(k, 4) * a.vector[0], b[1] + F(k, 4) * a.vector[1])
        y = t(x)
        assert (y[0] - x[0]).denominator == 1 and (y[1] - x[1]).denominator == 1


def test_offset_transform_examples():
    assert offset_transform(K2, (1, 0)) == (-1, 0)
    assert offset_transform(K2, (0, 1)) == (1, 0)
    assert offset_transform(K0, (0, 1)) == (1, F(1, 2))
    assert offset_transform(K2, (1, 1)) is None


def test_curve_action_examples():
    assert curve_action(K2, CurveClass((1, 0))) is Action.FIXED
    assert curve_action(K2, CurveClass((0, 1))) is Action.REFLECTION
    assert curve_action(K0, CurveClass((1, 0))) is Action.ANTIPODAL
    with pytest.raises(InvariantViolation):
        curve_action(K2, CurveClass((1, 1)))


def _table(c):
    return [(i.curve.vector, i.curve.offset, i.action, i.twin_index)
            for i in invariant_curve_classes(c)]


def test_invariant_classes_two_components():
    assert _table(K2) == [
        ((0, 1), 0, Action.REFLECTION, None),
        ((1, 0), 0, Action.FIXED, 0),
        ((1, 0), F(1, 2), Action.FIXED, 1),
    ]


def test_invariant_classes_one_component():
    assert _table(K1) == [
        ((1, -1), 0, Action.REFLECTION, None),
        ((1, 1), 0, Action.FIXED, None),
        ((1, 1), F(1, 2), Action.ANTIPODAL, None),
    ]


def test_invariant_classes_no_components():
    assert _table(K0) == [
        ((1, 0), 0, Action.ANTIPODAL, 0),
        ((1, 0), F(1, 2), Action.ANTIPODAL, 1),
    ]


@given(real_structures())
@settings(max_examples=150, deadline=None)
def test_invariant_class_counts_and_brute_force_actions(c):
    classes = invariant_curve_classes(c)
    k = fixed_components(c).component_count
    expected = {
        2: Counter({Action.FIXED: 2, Action.REFLECTION: 1}),
        1: Counter({Action.FIXED: 1, Action.REFLECTION: 1, Action.ANTIPODAL: 1}),
        0: Counter({Action.ANTIPODAL: 2}),
    }[k]
    assert Counter(i.action for i in classes) == expected
    for inv in classes:
        assert brute_action(c, inv.curve.vector, inv.curve.base_point()) is inv.action


@given(real_structures())
@settings(max_examples=60, deadline=None)
def test_brute_force_finds_no_other_invariant_geodesics(c):
    listed = {(i.curve.vector, i.curve.offset) for i in invariant_curve_classes(c)}
    for v in [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1)]:
        for s in range(8):
            k = CurveClass(v, F(s, 8))
            act = brute_action(c, k.vector, k.base_point())
            assert (act is not None) == is_invariant(c, k)
            if act is not None and act is not Action.REFLECTION:
                assert (k.vector, k.offset) in listed


def test_are_twins_examples():
    fixed0, fixed1 = CurveClass((1, 0)), CurveClass((1, 0), F(1, 2))
    assert are_twins(K2, fixed0, fixed1)
    assert not are_twins(K2, fixed0, CurveClass((0, 1)))
    assert not are_twins(K2, fixed0, fixed0)
    assert are_twins(K0, CurveClass((1, 0)), CurveClass((1, 0), F(1, 2)))
    assert not are_twins(K1, CurveClass((1, 1)), CurveClass((1, 1), F(1, 2)))


@given(real_structures())
@settings(max_examples=80, deadline=None)
def test_twins_symmetric_and_swapped(c):
    classes = invariant_curve_classes(c)
    for x in classes:
        assert not are_twins(c, x, x)
        for y in classes:
            assert are_twins(c, x, y) == are_twins(c, y, x)
            assert are_twins(c, x, y) == (x.twin_index is not None and y.twin_index is not None
                                          and x != y and x.action == y.action)
    if fixed_components(c).component_count != 1:
        r = twin_swap(c)
        assert conjugate(r, c) == c
        for x in classes:
            image = equivariant_class(c, apply_map_to_curve(r, x.curve))
            if x.twin_index is None:
                assert image == x
            else:
                assert are_twins(c, x, image)


def test_apply_map_examples():
    k = CurveClass((1, 0))
    assert apply_map_to_curve(translation((0, 0)), k) == k
    assert apply_map_to_curve(R_HALF, k) == CurveClass((1, 0), F(1, 2))
    assert apply_map_to_curve(affine([[0, 1], [1, 0]]), k).vector == (0, 1)


@given(real_structures(), unimodular())
@settings(max_examples=100, deadline=None)
def test_apply_map_is_bijection_on_invariant_classes(c, phi):
    d = conjugate(phi, c)
    images = sorted(equivariant_class(d, apply_map_to_curve(phi, i.curve)) for i in invariant_curve_classes(c))
    assert images == sorted(invariant_curve_classes(d))
    for i in invariant_curve_classes(c):
        assert equivariant_class(d, apply_map_to_curve(phi, i.curve)).action is i.action


@given(real_codes())
@settings(max_examples=200, deadline=None)
def test_twist_conjugation_law(code):
    c, a = code
    t = dehn_twist(a)
    assert conjugate(c, t) == inverse(t)
    assert is_real_structure(compose(t, c))
    m = monodromy_twist(c, a)
    assert conjugate(c, m) == inverse(m)
    assert is_real_structure(compose(m, c))


def test_monodromy_twist_matches_plain_twist_for_reflections():
    a = CurveClass((0, 1))
    assert monodromy_twist(K2, a) == dehn_twist(a)
    # isolated classes: the twist sits on the opposite invariant geodesic
    assert monodromy_twist(K2, CurveClass((1, 0))) == dehn_twist(CurveClass((1, 0), F(1, 2)))
