"""Points of the twisted cubic variety, its automorphisms and cubic curves through three points."""

from fractions import Fraction

import pytest
from hypothesis import assume, given

from cubicjordan.acceptance import seeded_triples
from cubicjordan.catalog import catalog_get
from cubicjordan.cubic import (
    ZornPoint,
    check_structural,
    curve_report,
    infinity_point,
    inversion_I,
    nu3,
    on_X,
    parse_point,
    same_curve,
    structural_G,
    translation_T,
    twisted_cubic_through,
    zero_point,
)
from cubicjordan.errors import GenericityFailure, InputError, RankError, StructuralCheckFailed

from conftest import vectors

A1 = catalog_get("A1").algebra
A7 = catalog_get("A7").algebra
JSTAR = catalog_get("Jstar").algebra
H3R = catalog_get("H3R").algebra


@given(vectors(4), vectors(4))
def test_equivariance_dim4(x, w):
    J = A7
    p = nu3(J, x)
    assert on_X(J, p)
    assert translation_T(J, w, p) == nu3(J, [a + b for a, b in zip(x, w)])
    if J.is_invertible(x):
        assert inversion_I(p).proj_equal(nu3(J, J.invert(x)))


@given(vectors(6), vectors(6))
def test_equivariance_h3(x, w):
    J = H3R
    p = nu3(J, x)
    assert translation_T(J, w, p) == nu3(J, [a + b for a, b in zip(x, w)])
    if J.is_invertible(x):
        assert inversion_I(p).proj_equal(nu3(J, J.invert(x)))


@given(vectors(10), vectors(4), vectors(4))
def test_translations_form_a_group(coords, v, w):
    assume(any(coords))
    J = JSTAR
    M = ZornPoint.from_coords(coords, 4)
    vw = [a + b for a, b in zip(v, w)]
    assert translation_T(J, w, translation_T(J, v, M)) == translation_T(J, vw, M)
    assert inversion_I(inversion_I(M)) == M


def test_special_points():
    assert on_X(A1, zero_point(A1)) and on_X(A1, infinity_point(A1))
    # rank-one element: I(nu3(e1)) has s = 0, and a translation also kills t
    P = translation_T(A1, [-1, 0, 0], inversion_I(nu3(A1, [1, 0, 0])))
    assert P.s == 0 and P.t == 0
    assert on_X(A1, P)


@given(vectors(3))
def test_off_variety_points_rejected(x):
    p = nu3(A1, x)
    bumped = ZornPoint(p.s, p.x, p.y, p.t + 1)
    assert not on_X(A1, bumped)


def test_parse_point_and_sizes():
    assert list(parse_point(["1", "1/2", 0, 0, 0, 0, 0, 0], 3).x) == [Fraction(1, 2), 0, 0]
    with pytest.raises(InputError):
        parse_point([0] * 8, 3)
    with pytest.raises(InputError):
        nu3(A1, [1, 2])
    with pytest.raises(RankError):
        nu3(catalog_get("Spin(3)").algebra, [1, 0, 0, 0])


# -- structural maps ------------------------------------------------------------------------


def test_scalar_structural_map():
    lam = 3
    g = [[lam if i == j else 0 for j in range(4)] for i in range(4)]
    gs = [[Fraction(1, lam) if i == j else 0 for j in range(4)] for i in range(4)]
    pair = check_structural(A7, g, gs, lam ** 3)
    P = nu3(A7, [1, 2, -1, 3])
    assert on_X(A7, structural_G(A7, pair, P))


@given(vectors(3))
def test_diagonal_structural_map_preserves_variety(x):
    a, b, c = 2, -3, 5
    g = [[a, 0, 0], [0, b, 0], [0, 0, c]]
    gs = [[Fraction(1, a), 0, 0], [0, Fraction(1, b), 0], [0, 0, Fraction(1, c)]]
    pair = check_structural(A1, g, gs, a * b * c)
    image = structural_G(A1, pair, nu3(A1, x))
    assert on_X(A1, image)
    assert image.proj_equal(nu3(A1, [a * x[0], b * x[1], c * x[2]]))


def test_wrong_structural_normalizations_rejected():
    a, b, c = 2, -3, 5
    g = [[a, 0, 0], [0, b, 0], [0, 0, c]]
    cofactor = [[b * c, 0, 0], [0, a * c, 0], [0, 0, a * b]]
    with pytest.raises(StructuralCheckFailed):
        check_structural(A1, g, cofactor, a * b * c)
    with pytest.raises(StructuralCheckFailed):
        check_structural(A1, g, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1)
    with pytest.raises(InputError):
        check_structural(A1, g, g, 0)


# -- cubic curves ----------------------------------------------------------------------------


@pytest.mark.parametrize("J", [A1, A7, JSTAR, H3R], ids=lambda J: J.name)
def test_curve_through_three_points(J):
    triples, _ = seeded_triples(J, 3)
    for x, y, z in triples:
        curve = twisted_cubic_through(J, x, y, z)
        rep = curve_report(curve, x, y, z)
        assert rep == {"degree": 3, "primitive": True, "span_dim": 4, "through_y": True,
                       "through_z": True, "through_x_at_infinity": True,
                       "points_on_X": True}


@given(vectors(3), vectors(3), vectors(3))
def test_curve_properties_random(x, y, z):
    try:
        curve = twisted_cubic_through(A1, x, y, z)
    except GenericityFailure:
        return
    rep = curve_report(curve, x, y, z)
    assert all(rep.values())
    assert rep["degree"] == 3 and rep["span_dim"] == 4
    # the same three points in another order give the same curve
    assert same_curve(curve, twisted_cubic_through(A1, y, z, x))
    assert same_curve(twisted_cubic_through(A1, z, x, y), curve)


def test_different_triples_give_different_curves():
    c1 = twisted_cubic_through(A1, [0, 0, 0], [1, 1, 1], [2, 3, 5])
    c2 = twisted_cubic_through(A1, [0, 0, 0], [1, 1, 1], [2, 3, 7])
    assert not same_curve(c1, c2)


def test_non_generic_triple_names_the_condition():
    with pytest.raises(GenericityFailure) as info:
        twisted_cubic_through(A1, [0, 0, 0], [1, 0, 1], [1, 2, 3])
    assert "y1" in info.value.witness
    with pytest.raises(GenericityFailure) as info:
        twisted_cubic_through(A1, [0, 0, 0], [1, 1, 1], [1, 2, 3])
    assert "z2" in info.value.witness


def test_curve_json():
    curve = twisted_cubic_through(A1, [0, 0, 0], [1, 1, 1], [2, 3, 5])
    out = curve.to_json()
    assert out["degree"] == 3 and len(out["components"]) == 8
