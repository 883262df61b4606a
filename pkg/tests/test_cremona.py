"""Quadro-quadric Cremona maps: involution certificates, bidegree and base locus samples."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicjordan.catalog import catalog_get, cubic_names
from cubicjordan.core.poly import variables
from cubicjordan.cremona import (
    CremonaMap,
    adjoint_cremona,
    base_locus_samples,
    bidegree_certificate,
    common_factor_degree,
    line_gcd_degree,
    verify_involution,
)
from cubicjordan.errors import InputError, NotProportional
from cubicjordan.variety import extract_cremona, scroll_param

from conftest import vectors

SMALL = cubic_names(max_dim=4)


def test_a1_certificate():
    cert = verify_involution(adjoint_cremona(catalog_get("A1").algebra))
    assert cert.n_cubic.format() == "x1*x2*x3"
    assert cert.m_cubic.format() == "x1*x2*x3"
    out = cert.to_json()
    assert out["n"] == "x1*x2*x3" and out["ell"][0] == ["1", "0", "0"]


@pytest.mark.parametrize("name", SMALL)
def test_n_is_the_norm(name):
    J = catalog_get(name).algebra
    cert = verify_involution(adjoint_cremona(J))
    assert cert.n_cubic == J.norm_form()
    phi = adjoint_cremona(J)
    assert cert.m_cubic.compose(list(phi.components)) == cert.n_cubic ** 2


@given(st.sampled_from(SMALL), vectors(4))
def test_numeric_involution(name, x):
    J = catalog_get(name).algebra
    x = x[:J.dim]
    phi = adjoint_cremona(J)
    assert phi(phi(x)) == [J.norm(x) * c for c in x]


def test_scaled_ell():
    phi = adjoint_cremona(catalog_get("A1").algebra)
    cert = verify_involution(phi, ell=[[2, 0, 0], [0, 2, 0], [0, 0, 2]])
    assert cert.n_cubic.format() == "2*x1*x2*x3"


def test_wrong_ell_fails_with_witness():
    phi = adjoint_cremona(catalog_get("A1").algebra)
    with pytest.raises(NotProportional) as info:
        verify_involution(phi, ell=[[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert info.value.witness is not None
    with pytest.raises(InputError):
        verify_involution(phi, ell=[[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    with pytest.raises(InputError):
        verify_involution(phi, ell=[[1, 0], [0, 1]])


def test_non_involution_rejected():
    x1, x2, x3 = variables(3)
    phi = CremonaMap((x1 * x1, x1 * x2, x2 * x3))
    with pytest.raises(NotProportional):
        verify_involution(phi)
    assert bidegree_certificate(phi)["involution"] is False


def test_cremona_map_shape_checks():
    x1, x2, x3 = variables(3)
    with pytest.raises(InputError):
        CremonaMap((x1 * x2 * x3, x1, x2))
    with pytest.raises(InputError):
        CremonaMap((x1 * x2, x1 * x3))


def test_line_gcd_sees_factor_of_s():
    x1, x2 = variables(2)
    polys = [x1 * x1, x1 * x2]
    # the line through (0,1) and (1,0): x1 = t, so the s-factor is invisible in t
    assert line_gcd_degree(polys, [0, 1], [1, 0]) == 1
    assert line_gcd_degree(polys, [1, 1], [1, 2]) == 1
    assert line_gcd_degree([x1 * x1, x2 * x2], [1, 1], [1, 2]) == 0


@pytest.mark.parametrize("kind", ["S122", "S113"])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_scroll_maps_have_linear_factor(kind, r):
    rep = bidegree_certificate(extract_cremona(scroll_param(kind, r)))
    assert rep["scroll_case"] and rep["common_factor_degree"] == 1


def test_bidegree_types():
    rep = bidegree_certificate(adjoint_cremona(catalog_get("Jstar").algebra))
    assert rep["type"] == "(2,2)" and rep["involution"]
    x1, x2, x3 = variables(3)
    assert common_factor_degree([x1 * x1, 2 * x1 * x1, -x1 * x1]) == 2


@pytest.mark.parametrize("name", ["A1", "A3", "A7", "CxJprime(3)"])
def test_base_locus_samples_vanish(name):
    J = catalog_get(name).algebra
    phi = adjoint_cremona(J)
    cert = verify_involution(phi)
    samples = base_locus_samples(phi, cert)
    assert samples
    for s in samples:
        assert s["phi_v_zero"] and s["n_v_zero"] and s["m_v_zero"]
