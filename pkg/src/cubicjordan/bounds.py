"""Castelnuovo-Harris type bound functions, in exact integer arithmetic.

``pi(r, n, d)`` bounds the geometric genus of an r-dimensional variety of degree d
in ``P^(n+r-1)``; ``pibar(r, n, delta)`` bounds the span of an (r+1)-fold
n-covered by curves of degree delta, and ``pibar(r,n,delta) = pi(r,n,d)`` for
``d = delta + r(n-1) + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core.scalar import normalize
from .errors import InputError


def binom(a: int, b: int) -> int:
    """``C(a, b)``, zero when ``b < 0`` or ``a < b``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def _check(r, n):
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}", module="bounds")
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}", module="bounds")


@dataclass(frozen=True)
class BoundQuery:
    r: int
    n: int
    delta: int

    def __post_init__(self):
        _check(self.r, self.n)
        if self.delta < self.n - 1:
            raise InputError(f"delta must be >= n-1 = {self.n - 1}, got {self.delta}",
                             module="bounds")

    @property
    def rho(self):
        return self.delta // (self.n - 1)

    @property
    def m(self):
        return self.delta - self.rho * (self.n - 1) + 1

    @property
    def m_prime(self):
        return self.n - 1 - self.m

    @property
    def d(self):
        return self.delta + self.r * (self.n - 1) + 2


def pi(r: int, n: int, d: int) -> int:
    """``sum_{s>=0} C(s+r-1, s) * max(d - (s+r)(n-1) - 1, 0)``."""
    _check(r, n)
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}", module="bounds")
    # terms vanish once (s+r)(n-1) + 1 >= d
    s_max = max(0, -(-(d - 1) // (n - 1)) - r)
    total = 0
    for s in range(s_max + 1):
        term = d - (s + r) * (n - 1) - 1
        if term <= 0:
            break
        total += binom(s + r - 1, s) * term
    return total


def pibar(r: int, n: int, delta: int) -> int:
    """``m C(r+rho+1, r+1) + m' C(r+rho, r+1)``."""
    q = BoundQuery(r, n, delta)
    return q.m * binom(r + q.rho + 1, r + 1) + q.m_prime * binom(r + q.rho, r + 1)


def pibar_equals_pi(r: int, n: int, delta: int):
    """Both sides of the identity, with the degree ``d`` used."""
    q = BoundQuery(r, n, delta)
    left, right = pibar(r, n, delta), pi(r, n, q.d)
    return {"holds": left == right, "pibar": left, "pi": right, "d": q.d}


def degree_bound(r: int, n: int, delta: int):
    """``delta^(r+1) / (n-1)^r``."""
    BoundQuery(r, n, delta)
    return normalize(Fraction(delta ** (r + 1), (n - 1) ** r))


def theta(r: int, n: int, k: int) -> int:
    """``(n-1+k)^(r+1) - (n-1)^r (n + k(r+1) - 2)``."""
    _check(r, n)
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}", module="bounds")
    return (n - 1 + k) ** (r + 1) - (n - 1) ** r * (n + k * (r + 1) - 2)


def identity_grid(r_range=range(1, 7), n_range=range(2, 9), delta_max=20):
    """All ``(r, n, delta)`` with ``n-1 <= delta <= delta_max``."""
    for r in r_range:
        for n in n_range:
            for delta in range(n - 1, delta_max + 1):
                yield r, n, delta


def table_rows(r_range=range(1, 7), n_range=range(2, 9), delta_max=20):
    """Rows ``(r, n, delta, rho, m, m', d, pibar, pi, degree_bound)``."""
    for r, n, delta in identity_grid(r_range, n_range, delta_max):
        q = BoundQuery(r, n, delta)
        yield (r, n, delta, q.rho, q.m, q.m_prime, q.d, pibar(r, n, delta), pi(r, n, q.d),
               degree_bound(r, n, delta))


TABLE_HEADER = ("r", "n", "delta", "rho", "m", "m_prime", "d", "pibar", "pi", "degree_bound")
