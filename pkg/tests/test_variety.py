"""Cubic parametrizations, line images, three-point curves and the secant solver."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicjordan.acceptance import seeded_triples
from cubicjordan.catalog import catalog_get
from cubicjordan.core.poly import variables
from cubicjordan.core.scalar import QuadScalar, conj
from cubicjordan.cremona import adjoint_cremona, verify_involution
from cubicjordan.cubic import ZornPoint
from cubicjordan.errors import DegenerateQ, InputError
from cubicjordan.variety import (
    VarietyParam,
    a3_explicit,
    extract_cremona,
    from_cremona,
    jordan_variety,
    line_image,
    meets_base_locus,
    nondegeneracy_rank,
    oadp_solve,
    primitive_check,
    scroll_param,
    seeded_lines,
    seeded_secant_queries,
    segre_relations_hold,
    three_point_curve_check,
)

from conftest import vectors

A1 = catalog_get("A1").algebra
A3 = catalog_get("A3").algebra
JSTAR = catalog_get("Jstar").algebra


def test_a3_matches_explicit_formula():
    assert jordan_variety(A3).components == a3_explicit().components


@given(vectors(4))
def test_a1_image_is_segre(p):
    V = jordan_variety(A1)
    assert segre_relations_hold(V(p))


def test_segre_relations_detect_other_points():
    assert not segre_relations_hold([1, 0, 0, 0, 0, 0, 0, 1])
    assert segre_relations_hold([1, 1, 1, 1, 1, 1, 1, 1])


@pytest.mark.parametrize("name", ["A1", "A7", "Jstar", "CxJprime(3)", "H3R"])
def test_variety_properties(name):
    J = catalog_get(name).algebra
    V = jordan_variety(J)
    assert V.r == J.dim - 1 and len(V.components) == 2 * J.dim + 2
    assert nondegeneracy_rank(V) == 2 * V.r + 4
    assert primitive_check(V)
    for p, q in seeded_lines(V, 5):
        img = line_image(V, p, q)
        assert (img.degree, img.span_dim) == (3, 4)
    # the chart is nu3
    assert V.chart([1] * J.dim) == list(ZornPoint(1, *_nu3_parts(J, [1] * J.dim)).coords())


def _nu3_parts(J, x):
    n, adj = J.norm_and_adjoint(x)
    return x, adj, n


def test_cremona_roundtrip():
    phi = adjoint_cremona(JSTAR)
    cert = verify_involution(phi)
    V = from_cremona(phi, cert)
    assert extract_cremona(V).components == phi.components


@pytest.mark.parametrize("kind", ["S122", "S113"])
def test_scroll_param(kind):
    V = scroll_param(kind, 3)
    assert nondegeneracy_rank(V) == 10
    with pytest.raises(InputError):
        scroll_param("S111", 2)


def test_lines_through_base_locus():
    V = jordan_variety(A1)
    # both points in x0 = 0
    assert meets_base_locus(V, [0, 1, 0, 0], [0, 0, 1, 0])
    # meets x0 = 0 at (0, 1, 0, 0), where x1^3-part and phi vanish
    assert meets_base_locus(V, [1, 0, 0, 0], [1, 1, 0, 0])
    assert not meets_base_locus(V, [1, 2, 3, 4], [0, 1, -1, 2])
    img = line_image(V, [1, 0, 0, 0], [1, 1, 0, 0])
    assert img.degree < 3
    # a line inside x0 = 0 maps to the single point (0 : ... : 0 : 1)
    img = line_image(V, [0, 1, 2, 3], [0, 1, -1, 1])
    assert img.degree == 0 and img.span_dim == 1


def test_variety_param_validation():
    x = variables(3)
    with pytest.raises(InputError):
        VarietyParam(1, (x[0] ** 3,), "bad")
    with pytest.raises(InputError):
        VarietyParam(1, tuple([x[0] ** 2] * 6), "bad")


@pytest.mark.parametrize("name", ["A1", "A8", "Jstar"])
def test_three_point_curves_on_image(name):
    J = catalog_get(name).algebra
    V = jordan_variety(J)
    triples, _ = seeded_triples(J, 4)
    for tr in triples:
        assert three_point_curve_check(V, J, *tr)["ok"]


# -- secants ------------------------------------------------------------------------------


def test_known_secant():
    sol = oadp_solve(A1, [1, 1, 2, 3, 4, 5, 6, 7])
    assert sol.D == 105
    assert str(sol.lambda_mu) == "-16/105"
    assert sol.lam + sol.mu == 1 and sol.lam * sol.mu == sol.lambda_mu
    assert sol.line_check and sol.on_X and sol.conjugation_swaps
    assert [conj(c) for c in sol.p1.coords()] == sol.p2.coords()
    assert sol.to_json()["uniqueness"] == "derivation-forced"


@given(st.sampled_from(["A1", "A3", "Jstar"]), vectors(9))
def test_random_secants(name, coords):
    J = catalog_get(name).algebra
    q = [1] + coords[:2 * J.dim + 1]
    try:
        sol = oadp_solve(J, q)
    except DegenerateQ:
        return
    assert sol.line_check and sol.on_X and sol.conjugation_swaps
    # independent collinearity check: q = a p1 + (1 - a) p2, both p_i having s = 1
    p1, p2 = sol.p1.coords(), sol.p2.coords()
    assert p1[0] == 1 and p2[0] == 1
    j = next(i for i in range(len(q)) if p1[i] != p2[i])
    a = _as_quad(q[j] - p2[j], sol.D) * _as_quad(p1[j] - p2[j], sol.D).inverse()
    assert all(c == a * u + (1 - a) * v for c, u, v in zip(q, p1, p2))
    assert a == sol.lam


def _as_quad(c, D):
    if isinstance(c, QuadScalar):
        return c
    return QuadScalar(c, 0, D)


def test_seeded_queries_are_general():
    qs = seeded_secant_queries(A1, 5)
    assert len(qs) == 5
    for q in qs:
        sol = oadp_solve(A1, q)
        assert sol.line_check


@pytest.mark.parametrize("q, msg", [
    ([0, 1, 2, 3, 4, 5, 6, 7], "s = 0"),
    ([1, 0, 0, 0, 1, 1, 1, 0], "z = 0"),
    ([1, 0, 0, 0, 1, 0, 0, 1], "m\\(q'\\) = 0"),
])
def test_degenerate_queries(q, msg):
    with pytest.raises(DegenerateQ, match=msg):
        oadp_solve(A1, q)


def test_query_shape_checked():
    with pytest.raises(InputError):
        oadp_solve(A1, [1, 2, 3])
