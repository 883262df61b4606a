"""Univariate helpers on coefficient lists (index = power of t)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import Poly
from .scalar import normalize


def coeffs_of(p: Poly) -> list:
    if p.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    if not p.terms:
        return []
    out = [0] * (p.degree() + 1)
    for (a,), c in p.terms.items():
        out[a] = c
    return out


def from_coeffs(coeffs) -> Poly:
    return Poly(1, {(i,): c for i, c in enumerate(coeffs) if c != 0})


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def divmod_coeffs(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, bc in enumerate(b):
            a[i + shift] -= f * bc
        a = _trim(a)
    return [normalize(x) for x in q], [normalize(x) for x in a]


def gcd_coeffs(a, b):
    """Monic gcd (empty list for gcd(0, 0))."""
    a, b = _trim(a), _trim(b)
    while b:
        _, r = divmod_coeffs(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return [normalize(x / lead) for x in a]


def poly_gcd(polys) -> Poly:
    g = []
    for p in polys:
        g = gcd_coeffs(g, coeffs_of(p))
    return from_coeffs(g)


def exact_divide(p: Poly, d: Poly) -> Poly:
    q, r = divmod_coeffs(coeffs_of(p), coeffs_of(d))
    if any(x != 0 for x in r):
        raise ArithmeticError("univariate division is not exact")
    return from_coeffs(q)


def _divisors(n: int, limit: int = 10**12):
    n = abs(n)
    if n > limit:
        return None
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list:
    """Distinct rational roots of a univariate polynomial (rational root theorem).

    Coefficients too large to enumerate divisors of are skipped, so the result
    may be incomplete in that case; every returned value is a verified root.
    """
    c = _trim(coeffs_of(p))
    if not c:
        raise ValueError("the zero polynomial has every value as a root")
    roots = []
    if c[0] == 0:
        roots.append(0)
        while c[0] == 0:
            c = c[1:]
    den = 1
    for x in c:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in c]
    ps, qs = _divisors(ints[0]), _divisors(ints[-1])
    if ps is None or qs is None:
        return roots
    seen = set(roots)
    for a in ps:
        for b in qs:
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if cand in seen:
                    continue
                seen.add(cand)
                val = 0
                for x in reversed(ints):
                    val = val * cand + x
                if val == 0:
                    roots.append(normalize(cand))
    return sorted(roots)
