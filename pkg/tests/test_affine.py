from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from reallefschetz.affine import (
    IDENTITY,
    STRUCTURE_REPS,
    AffineClass,
    affine,
    compose,
    conjugate,
    fixed_components,
    frame_complement,
    inverse,
    is_real_structure,
    isotopic_structures,
    isotopy_translation,
    mat_mul,
    normalize_structure,
    smith_normal_form,
    structure_class,
    translation,
)
from reallefschetz.errors import NotInvolution

from conftest import real_structures, unimodular
from oracles import grid_fixed_count, snf_diagonal

DIAG = affine([[1, 0], [0, -1]])
DIAG_SHIFT = affine([[1, 0], [0, -1]], ["1/2", 0])
SWAP = affine([[0, 1], [1, 0]])
SHEAR = affine([[1, 1], [0, -1]])


def test_translation_is_reduced_mod_one():
    f = affine([[1, 0], [0, 1]], ["-1/3", "7/2"])
    assert f.translation == (F(2, 3), F(1, 2))


def test_rejects_non_unimodular_matrix():
    with pytest.raises(ValueError):
        affine([[2, 0], [0, 1]])


def test_compose_examples():
    assert compose(IDENTITY, SHEAR) == SHEAR
    assert compose(DIAG, DIAG) == IDENTITY
    assert compose(affine([[1, -1], [0, 1]]), DIAG) == affine([[1, 1], [0, -1]])


def test_inverse_examples():
    assert inverse(IDENTITY) == IDENTITY
    assert inverse(DIAG_SHIFT) == DIAG_SHIFT
    assert inverse(affine([[1, -1], [0, 1]])) == affine([[1, 1], [0, 1]])


def test_is_real_structure_examples():
    assert is_real_structure(DIAG)
    assert is_real_structure(DIAG_SHIFT)
    assert is_real_structure(SHEAR)
    assert not is_real_structure(affine([[1, 1], [0, 1]]))
    # det -1 but not an involution
    assert not is_real_structure(affine([[1, 1], [1, 0]]))


@pytest.mark.parametrize("c, count", [(DIAG, 2), (DIAG_SHIFT, 0), (SWAP, 1), (SHEAR, 1)])
def test_fixed_component_counts(c, count):
    report = fixed_components(c)
    assert report.component_count == count == len(report.components)
    assert grid_fixed_count(c) == count


def test_fixed_circle_descriptions():
    assert [(f.direction, f.base_point) for f in fixed_components(DIAG).components] == [
        ((1, 0), (0, 0)), ((1, 0), (0, F(1, 2)))]
    assert [f.direction for f in fixed_components(SWAP).components] == [(1, 1)]
    assert fixed_components(SHEAR).components[0].direction == (1, 0)


def test_fixed_components_rejects_non_involution():
    with pytest.raises(NotInvolution):
        fixed_components(affine([[1, 1], [0, 1]]))


@given(real_structures())
@settings(max_examples=150, deadline=None)
def test_fixed_circles_are_pointwise_fixed(c):
    for circle in fixed_components(c).components:
        for k in range(5):
            x = (circle.base_point[0] + F(k, 5) * circle.direction[0],
                 circle.base_point[1] + F(k, 5) * circle.direction[1])
            y = c(x)
            assert (y[0] - x[0]).denominator == 1 and (y[1] - x[1]).denominator == 1


@pytest.mark.parametrize("a", [
    ((1, 0), (0, 1)), ((0, 1), (0, -2)), ((0, 0), (0, 2)), ((4, 6), (2, 8)),
    ((3, 0), (0, 5)), ((0, 0), (0, 0)), ((2, 4), (1, 2)), ((-6, 9), (4, -6)),
])
def test_smith_form_against_sympy(a):
    U, D, V = smith_normal_form(a)
    assert mat_mul(mat_mul(U, a), V) == D
    assert abs(U[0][0] * U[1][1] - U[0][1] * U[1][0]) == 1
    assert abs(V[0][0] * V[1][1] - V[0][1] * V[1][0]) == 1
    d1, d2 = D[0][0], D[1][1]
    assert D[0][1] == D[1][0] == 0 and d1 >= 0 and d2 >= 0
    assert (d2 == 0) if d1 == 0 else d2 % d1 == 0
    assert sorted((d1, d2)) == sorted(snf_diagonal(a))


def test_smith_form_examples():
    assert smith_normal_form(((1, 0), (0, 1)))[1] == ((1, 0), (0, 1))
    # zero entries go last under the divisibility order
    assert smith_normal_form(((0, 0), (0, 2)))[1] == ((2, 0), (0, 0))
    assert smith_normal_form(((0, 1), (0, -2)))[1] == ((1, 0), (0, 0))


def test_isotopy_examples():
    assert isotopic_structures(DIAG, affine([[1, 0], [0, -1]], [0, "1/3"]))
    assert not isotopic_structures(DIAG, DIAG_SHIFT)
    assert isotopic_structures(SHEAR, SHEAR)


@given(real_structures(), unimodular())
@settings(max_examples=100, deadline=None)
def test_isotopy_translation_conjugates(c, phi):
    w = (F(phi.translation[0]), F(phi.translation[1]))
    c2 = conjugate(translation(w), c)
    s = isotopy_translation(c, c2)
    assert conjugate(translation(s), c) == c2


def test_conjugate_examples():
    assert conjugate(IDENTITY, SHEAR) == SHEAR
    assert conjugate(translation((0, F(1, 2))), DIAG) == DIAG
    assert conjugate(affine([[0, 1], [1, 0]]), DIAG) == affine([[-1, 0], [0, 1]])


@given(real_structures(), unimodular())
@settings(max_examples=150, deadline=None)
def test_conjugation_preserves_structure_and_count(c, phi):
    d = conjugate(phi, c)
    assert is_real_structure(d)
    assert fixed_components(d).component_count == fixed_components(c).component_count


@given(real_structures())
@settings(max_examples=150, deadline=None)
def test_normalize_structure_is_exact(c):
    phi, rep = normalize_structure(c)
    assert phi.det == 1
    assert conjugate(phi, c) == rep == STRUCTURE_REPS[fixed_components(c).component_count]
    assert structure_class(c) == grid_fixed_count(c)


@given(real_structures(), real_structures(), real_structures())
@settings(max_examples=100, deadline=None)
def test_isotopy_is_an_equivalence(a, b, c):
    assert isotopic_structures(a, a)
    assert isotopic_structures(a, b) == isotopic_structures(b, a)
    if isotopic_structures(a, b) and isotopic_structures(b, c):
        assert isotopic_structures(a, c)
    if isotopic_structures(a, b):
        assert fixed_components(a).component_count == fixed_components(b).component_count


def test_canonical_representatives_pairwise_distinct():
    counts = {k: fixed_components(c).component_count for k, c in STRUCTURE_REPS.items()}
    assert counts == {0: 0, 1: 1, 2: 2}


@pytest.mark.parametrize("a, b", [((1, 0), (0, 1)), ((0, 1), (-1, 0)), ((1, 1), (-1, 0)),
                                  ((2, 3), (-1, -1)), ((1, -2), (0, 1))])
def test_frame_complement(a, b):
    assert frame_complement(a) == b
    assert a[0] * b[1] - a[1] * b[0] == 1
