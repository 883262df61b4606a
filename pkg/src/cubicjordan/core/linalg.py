"""Exact Gaussian elimination over any field whose elements support + - * / and == 0.

Used with Fractions and with QuadScalar entries.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import normalize


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return normalize(Fraction(a, b))
    return a / b


def rref(rows):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [_div(x, lead) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def solve(a, b):
    """Unique solution of ``a x = b``; raises ``ValueError`` if singular or inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError("singular linear system")
    x = [0] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return x


def nullspace(a):
    """Basis of ``{x : a x = 0}`` as a list of vectors."""
    if not a:
        return []
    n = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def in_span(vectors, v) -> bool:
    return rank(list(vectors) + [list(v)]) == rank(vectors)


def det(m):
    """Determinant by elimination (small matrices / test helpers)."""
    m = [list(r) for r in m]
    n = len(m)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        lead = m[c][c]
        result = result * lead
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = _div(m[i][c], lead)
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return normalize(result) if isinstance(result, Fraction) else result


def mat_vec(m, v):
    out = []
    for row in m:
        acc = 0
        for a, x in zip(row, v):
            if a != 0:
                acc = acc + a * x
        out.append(acc)
    return out


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
