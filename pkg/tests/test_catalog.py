"""Catalog entries, their reference forms and name handling."""

import json

import pytest

from cubicjordan.catalog import (
    DEFAULT_NAMES,
    catalog_get,
    catalog_list,
    cubic_names,
    load_algebra,
)
from cubicjordan.core.poly import variables
from cubicjordan.errors import InputError, UnknownAlgebra


def _x(k):
    return [None] + variables(k)


def _dim4_table():
    """Adjoint and norm rows for the dimension-4 cubic algebras, typed independently."""
    x = _x(4)
    return {
        "A6": ([x[2] ** 2, x[1] * x[2], -x[1] * x[3], -x[1] * x[4]], x[1] * x[2] ** 2),
        "A7": ([x[1] ** 2, -x[1] * x[2], -x[1] * x[3], 2 * x[2] * x[3] - x[1] * x[4]],
               x[1] ** 3),
        "A8": ([x[1] ** 2, -x[1] * x[2], -x[1] * x[3], x[2] ** 2 - x[1] * x[4]], x[1] ** 3),
        "A13": ([x[2] * x[4], x[1] * x[4], -x[1] * x[3], x[1] * x[2]], x[1] * x[2] * x[4]),
        "A14": ([x[1] * x[2], x[1] ** 2, -x[2] * x[3], -x[1] * x[4]], x[1] ** 2 * x[2]),
        "CxJprime(3)": ([x[2] ** 2 + x[3] ** 2 + x[4] ** 2, x[1] * x[2], -x[1] * x[3],
                         -x[1] * x[4]], x[1] * (x[2] ** 2 + x[3] ** 2 + x[4] ** 2)),
        "Jstar": ([x[1] * x[2], x[1] ** 2, x[4] ** 2 - x[2] * x[3], x[1] * x[4]],
                  x[1] ** 2 * x[2]),
    }


@pytest.mark.parametrize("name", list(_dim4_table()))
def test_dimension_four_rows(name):
    adj, norm = _dim4_table()[name]
    J = catalog_get(name).algebra
    assert list(J.adjoint_form()) == adj
    assert J.norm_form() == norm


def test_dimension_three_forms():
    x = _x(3)
    A1 = catalog_get("A1").algebra
    assert A1.norm_form() == x[1] * x[2] * x[3]
    assert list(A1.adjoint_form()) == [x[2] * x[3], x[1] * x[3], x[1] * x[2]]
    A3 = catalog_get("A3").algebra
    assert A3.norm_form() == x[1] ** 3
    assert list(A3.adjoint_form()) == [x[1] ** 2, -x[1] * x[2], x[2] ** 2 - x[1] * x[3]]


@pytest.mark.parametrize("name", [n for n in DEFAULT_NAMES if n != "H3O"])
def test_entries_match_stored_references(name):
    e = catalog_get(name)
    if e.reference_adjoint is not None:
        assert tuple(e.algebra.adjoint_form()) == e.reference_adjoint
        assert e.algebra.norm_form() == e.reference_norm
    assert e.rank == (2 if name.startswith("Spin") else 3)


def test_h3_dimensions():
    dims = {n: catalog_get(n).dim for n in ("H3R", "H3C", "H3H", "H3O")}
    assert dims == {"H3R": 6, "H3C": 9, "H3H": 15, "H3O": 27}
    assert catalog_get("H3O").algebra.jordan_identity == "sampled"
    assert catalog_get("H3R").algebra.jordan_identity == "symbolic"


def test_list_and_cubic_names():
    rows = catalog_list()
    assert [r[0] for r in rows] == list(DEFAULT_NAMES)
    assert all(r[2] == 3 for r in rows if not r[0].startswith("Spin"))
    small = cubic_names(max_dim=4)
    assert "Spin(3)" not in small and "H3R" not in small and "A7" in small


def test_aliases_and_parameters():
    assert catalog_get("CxCxC").name == "A1"
    assert catalog_get("CxJprime").name == "CxJprime(3)"
    assert catalog_get("CxJprime(4)").dim == 5
    assert catalog_get("Spin([[1,0],[0,-1]])").rank == 2
    assert catalog_get("A18(3)").rank == 3


@pytest.mark.parametrize("name", ["A18(1)", "A18(-1)", "Spin(0)", "CxJprime(x)", "Spin([1,2"])
def test_invalid_parameters(name):
    with pytest.raises(InputError):
        catalog_get(name)


def test_unknown_name():
    with pytest.raises(UnknownAlgebra):
        catalog_get("A99")


def test_a18_is_isomorphic_to_a7_by_forms():
    # both are local of rank 3 with norm a cube of a linear form
    n = catalog_get("A18(2)").algebra.norm_form()
    x = _x(4)
    assert n == x[1] ** 3


def test_to_json_contains_reference():
    out = catalog_get("A7").to_json()
    assert out["reference_norm"] == "x1^3"
    assert out["spec"]["dim"] == 4
    json.dumps(out)


def test_load_algebra_from_file(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps(catalog_get("A8").spec.to_json()))
    J = load_algebra(str(path))
    assert J.norm_form() == catalog_get("A8").algebra.norm_form()
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2,\n "table": [}')
    with pytest.raises(InputError, match="line 2"):
        load_algebra(str(bad))
    with pytest.raises(UnknownAlgebra):
        load_algebra(str(tmp_path / "missing.json"))
