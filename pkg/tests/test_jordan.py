"""Jordan algebras: validation, rank, generic minimum polynomial, norm and adjoint."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from cubicjordan.catalog import catalog_get, matrix_algebra
from cubicjordan.core.poly import Poly, variables
from cubicjordan.errors import (
    AssociativityError,
    CommutativityError,
    InputError,
    JordanIdentityError,
    NotInvertible,
    RankError,
    UnitLawError,
)
from cubicjordan.jordan import (
    AlgebraSpec,
    check_associative,
    composition_algebra,
    direct_product,
    from_associative,
    hermitian_h3,
    interpolate_min_poly,
    jordan_defect,
    opposite,
    require_rank,
    spin_factor,
    validate,
    vadd,
    vscale,
    vsub,
)

from conftest import small_ints, vectors


def _unit(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def _m3_plus():
    basis = [_unit(3, i, j) for i in range(3) for j in range(3)]
    unit = [1 if i == j else 0 for i in range(3) for j in range(3)]
    return validate(from_associative(matrix_algebra(basis, unit, name="M3")))


def _h3(c):
    return validate(hermitian_h3(composition_algebra(c), name=f"H3({c})"))


M3 = _m3_plus()
H3R = _h3(1)
H3C = _h3(2)
A_Q3 = validate(AlgebraSpec(3, [[[1 if i == j == l else 0 for l in range(3)] for j in range(3)]
                                for i in range(3)], [1, 1, 1], name="Q3"))


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inv
        for i, j in enumerate(perm):
            term = m[i][j] * term
        total = term + total
    return total


def adjugate(m):
    def minor(i, j):
        return [[m[a][b] for b in range(3) if b != j] for a in range(3) if a != i]

    return [[(-1) ** (i + j) * leibniz_det(minor(j, i)) for j in range(3)] for i in range(3)]


# -- independent oracles ----------------------------------------------------------------


def test_matrix_algebra_norm_is_determinant_and_adjoint_is_adjugate():
    x = variables(9)
    m = [[x[3 * i + j] for j in range(3)] for i in range(3)]
    assert M3.rank == 3
    assert M3.norm_form() == leibniz_det(m)
    adj = adjugate(m)
    assert list(M3.adjoint_form()) == [adj[i][j] for i in range(3) for j in range(3)]


def test_real_symmetric_norm_is_determinant():
    r1, r2, r3, x1, x2, x3 = variables(6)
    m = [[r1, x3, x2], [x3, r2, x1], [x2, x1, r3]]
    assert H3R.norm_form() == leibniz_det(m)
    adj = adjugate(m)
    want = [adj[0][0], adj[1][1], adj[2][2], adj[2][1], adj[2][0], adj[1][0]]
    assert list(H3R.adjoint_form()) == want


def test_trace_is_matrix_trace():
    r1, r2, r3 = variables(6)[:3]
    assert H3R.generic_min_poly().trace == r1 + r2 + r3


@pytest.mark.parametrize("J", [A_Q3, H3R] + [catalog_get(n).algebra for n in ("A7", "Jstar",
                                                                             "Spin(3)")],
                         ids=lambda J: J.name)
def test_interpolation_agrees_with_newton(J):
    newton = J.generic_min_poly()
    fitted = interpolate_min_poly(J)
    assert fitted.sigma == newton.sigma


# -- properties --------------------------------------------------------------------------


def _u_op(J, x, y):
    """``U_x y = 2 x(xy) - x^2 y``."""
    return vsub(vscale(2, J.mul(x, J.mul(x, y))), J.mul(J.mul(x, x), y))


@given(vectors(6), vectors(6))
def test_h3_norm_identities(x, y):
    J = H3R
    n, a = J.norm_and_adjoint(x)
    assert J.mul(x, a) == [n * u for u in J.unit]
    assert J.adjoint(a) == [n * c for c in x]
    assert J.norm(a) == n * n
    assert J.norm(_u_op(J, x, y)) == n * n * J.norm(y)
    # x # x = 2 x^#
    assert J.sharp_bilinear(x, x) == [2 * c for c in a]


@given(vectors(9))
def test_h3c_adjoint_identities(x):
    J = H3C
    n, a = J.norm_and_adjoint(x)
    assert J.mul(x, a) == [n * u for u in J.unit]
    assert J.adjoint(a) == [n * c for c in x]


@given(vectors(9))
def test_inverse(x):
    J = M3
    if J.norm(x) == 0:
        with pytest.raises(NotInvertible):
            J.invert(x)
        return
    inv = J.invert(x)
    assert J.mul(x, inv) == J.unit
    assert J.norm(inv) == Fraction(1) / J.norm(x)


@given(vectors(3, small_ints), vectors(3, small_ints))
def test_associative_norm_multiplicative(x, y):
    assert A_Q3.norm(A_Q3.mul(x, y)) == A_Q3.norm(x) * A_Q3.norm(y)


@given(vectors(4), vectors(4))
def test_spin_factor_rank_two(x, y):
    J = validate(spin_factor([[1, 0, 0], [0, 1, 0], [0, 0, -1]]))
    assert J.rank == 2
    n, a = J.norm_and_adjoint(x)
    assert J.mul(x, a) == [n * u for u in J.unit]
    assert J.adjoint(a) == x
    assert jordan_defect(J.spec, x, y) == [0] * 4


def test_dimensions_and_ranks_of_h3():
    for c, dim in ((1, 6), (2, 9)):
        J = _h3(c)
        assert (J.dim, J.rank) == (dim, 3)
    big = hermitian_h3(composition_algebra(4))
    assert big.dim == 15


def test_composition_algebras_compose():
    for c in (1, 2, 4, 8):
        C = composition_algebra(c)
        n = C.check_composition()
        assert n.is_homogeneous(2)
        assert C.dim == c
    with pytest.raises(InputError):
        composition_algebra(3)


def test_sigma_forms_homogeneous():
    gmp = H3C.generic_min_poly()
    assert [s.is_homogeneous(i) for i, s in enumerate(gmp.sigma, start=1)] == [True] * 3


# -- constructions and negative cases ------------------------------------------------------


def test_direct_product_ranks_add():
    Q = AlgebraSpec(1, [[[1]]], [1], name="Q")
    spin = spin_factor([[1, 0], [0, 1]])
    J = validate(direct_product(Q, spin, name="QxSpin"))
    assert (J.dim, J.rank) == (4, 3)
    x0, l, y1, y2 = variables(4)
    assert J.norm_form() == x0 * (l * l + y1 * y1 + y2 * y2)


def test_opposite_of_matrix_algebra_has_same_plus():
    basis = [_unit(2, i, j) for i in range(2) for j in range(2)]
    A = matrix_algebra(basis, [1, 0, 0, 1])
    assert from_associative(A).table == from_associative(opposite(A)).table


def test_octonions_not_associative():
    with pytest.raises(AssociativityError):
        check_associative(composition_algebra(8).spec)


def test_noncommutative_table_rejected():
    basis = [_unit(2, i, j) for i in range(2) for j in range(2)]
    with pytest.raises(CommutativityError):
        validate(matrix_algebra(basis, [1, 0, 0, 1]))


def test_unit_law_rejected():
    spec = AlgebraSpec(2, [[[1, 0], [0, 0]], [[0, 0], [0, 0]]], [1, 0])
    with pytest.raises(UnitLawError):
        validate(spec)


def test_jordan_identity_failure_has_witness():
    # e, a, b with a^2 = b, b^2 = a, ab = 0: commutative and unital, not Jordan
    spec = AlgebraSpec(3, [[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                           [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
                           [[0, 0, 1], [0, 0, 0], [0, 1, 0]]], [1, 0, 0], name="bad")
    for mode in ("symbolic", "sampled"):
        with pytest.raises(JordanIdentityError) as info:
            validate(spec, mode=mode)
        assert "x" in info.value.witness or "y" in info.value.witness


def test_malformed_tables():
    with pytest.raises(InputError):
        AlgebraSpec(2, [[[1, 0]]], [1, 0])
    with pytest.raises(InputError):
        AlgebraSpec(1, [[["a"]]], [1])
    with pytest.raises(InputError):
        validate(AlgebraSpec(1, [[[1]]], [1]), mode="fast")


def test_require_rank():
    J = validate(spin_factor([[1]]))
    with pytest.raises(RankError):
        require_rank(J, 3, "nu3")


def test_spec_json_roundtrip():
    spec = H3R.spec
    assert AlgebraSpec.from_json(spec.to_json()).table == spec.table


def test_powers_and_vectors():
    x = [1, 2, 3]
    assert A_Q3.powers(x, 3)[3] == [1, 8, 27]
    assert vadd([1, 2], [3, 4]) == [4, 6]
    assert isinstance(A_Q3.norm_form(), Poly)


def _h3c_matrix(v):
    """The first-component matrix A of a Hermitian matrix over Q x Q (its pair is (A, A^T))."""
    slots = {0: (2, 1), 1: (2, 0), 2: (1, 0)}
    A = [[0] * 3 for _ in range(3)]
    for a in range(3):
        A[a][a] = v[a]
    for s, (r, col) in slots.items():
        A[r][col] = v[3 + 2 * s]
        A[col][r] = v[4 + 2 * s]
    return A, slots


def test_split_complex_h3_is_matrix_algebra():
    x = variables(9)
    A, slots = _h3c_matrix(x)
    assert H3C.norm_form() == leibniz_det(A)
    adj = adjugate(A)
    want = [adj[a][a] for a in range(3)]
    for s in range(3):
        r, col = slots[s]
        want += [adj[r][col], adj[col][r]]
    assert list(H3C.adjoint_form()) == want


@given(vectors(6), small_ints, small_ints, small_ints, small_ints, small_ints, small_ints)
def test_norm_multiplicative_on_subalgebra_generated_by_y(y, a0, a1, a2, b0, b1, b2):
    J = H3R
    e, y2 = J.unit, J.mul(y, y)

    def elem(c0, c1, c2):
        return vadd(vadd(vscale(c0, e), vscale(c1, y)), vscale(c2, y2))

    x, xp = elem(a0, a1, a2), elem(b0, b1, b2)
    assert J.norm(J.mul(x, xp)) == J.norm(x) * J.norm(xp)


@given(vectors(9), vectors(9), small_ints, small_ints)
def test_trace_linear(x, y, a, b):
    J = H3C
    assert J.trace(vadd(vscale(a, x), vscale(b, y))) == a * J.trace(x) + b * J.trace(y)


def test_a18_and_a19_match_commutative_models():
    # same rank and the same norm form as A7 and A8 in the documented bases
    for name, model in (("A18(2)", "A7"), ("A18(-3)", "A7"), ("A19", "A8")):
        J, M = catalog_get(name).algebra, catalog_get(model).algebra
        assert J.rank == M.rank == 3
        assert J.norm_form() == M.norm_form()
