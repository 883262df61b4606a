"""Castelnuovo-Harris type bound functions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicjordan.bounds import (
    TABLE_HEADER,
    BoundQuery,
    binom,
    degree_bound,
    identity_grid,
    pi,
    pibar,
    pibar_equals_pi,
    table_rows,
    theta,
)
from cubicjordan.errors import InputError


def pi_bruteforce(r, n, d):
    """Direct sum over s with an overly generous cutoff."""
    return sum(binom(s + r - 1, s) * max(d - (s + r) * (n - 1) - 1, 0) for s in range(d + 2))


def test_spot_values():
    assert pibar(2, 3, 3) == 8
    assert pibar(2, 4, 3) == 6
    assert pibar(1, 2, 2) == 6
    assert pi(1, 2, 4) == 3
    assert pi(2, 3, 9) == 8
    assert degree_bound(3, 6, 9) == Fraction(6561, 125)


@given(st.integers(1, 8))
def test_pibar_r33_is_2r_plus_4(r):
    assert pibar(r, 3, 3) == 2 * r + 4


def test_grid_size_and_identity():
    cases = list(identity_grid())
    assert len(cases) == 714
    assert all(pibar_equals_pi(*c)["holds"] for c in cases)


@given(st.integers(1, 7), st.integers(2, 9), st.integers(0, 40))
def test_identity_beyond_grid(r, n, extra):
    delta = n - 1 + extra
    rep = pibar_equals_pi(r, n, delta)
    assert rep["holds"] and rep["d"] == delta + r * (n - 1) + 2


@given(st.integers(1, 6), st.integers(2, 8), st.integers(1, 60))
def test_pi_matches_bruteforce(r, n, d):
    assert pi(r, n, d) == pi_bruteforce(r, n, d)


@given(st.integers(1, 5), st.integers(2, 6), st.integers(1, 6))
def test_degree_bound_at_multiples(r, n, rho):
    assert degree_bound(r, n, rho * (n - 1)) == rho ** (r + 1) * (n - 1)


def test_query_fields():
    q = BoundQuery(2, 4, 7)
    assert (q.rho, q.m, q.m_prime, q.d) == (2, 2, 1, 15)
    assert binom(3, 5) == 0 and binom(5, -1) == 0


def test_theta_values():
    # (n-1+k)^(r+1) - (n-1)^r (n + k(r+1) - 2)
    assert theta(2, 3, 1) == 27 - 4 * 4
    assert theta(1, 2, 2) == 9 - 1 * 4


@pytest.mark.parametrize("call", [
    lambda: pi(0, 3, 3), lambda: pi(1, 1, 3), lambda: pi(1, 3, 0),
    lambda: pibar(1, 3, 1), lambda: degree_bound(1, 3, 1), lambda: theta(1, 3, 0),
])
def test_domain_errors(call):
    with pytest.raises(InputError):
        call()


def test_table_rows():
    rows = list(table_rows(range(1, 2), range(2, 3), 4))
    assert len(rows[0]) == len(TABLE_HEADER)
    assert rows[0] == (1, 2, 1, 1, 1, 0, 4, 3, 3, 1)
    assert all(row[7] == row[8] for row in rows)
