"""Builders for structure tables: A+, direct products, spin factors, H3(C)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.poly import variables
from ..core.scalar import normalize, to_scalar
from ..errors import AssociativityError, CompositionError, InputError
from .algebra import AlgebraSpec, basis_vector, vsub, vzero


def _table_from_products(k, prod):
    return [[prod(i, j) for j in range(k)] for i in range(k)]


def check_associative(spec: AlgebraSpec):
    """Exact check on basis triples (the associator is trilinear)."""
    k = spec.dim
    basis = [basis_vector(i, k) for i in range(k)]
    for i in range(k):
        for j in range(k):
            bij = spec.product(basis[i], basis[j])
            for l in range(k):
                lhs = spec.product(bij, basis[l])
                rhs = spec.product(basis[i], spec.product(basis[j], basis[l]))
                if lhs != rhs:
                    raise AssociativityError(
                        f"(b{i + 1} b{j + 1}) b{l + 1} != b{i + 1} (b{j + 1} b{l + 1})",
                        witness={"i": i + 1, "j": j + 1, "l": l + 1},
                    )
    e = list(spec.unit)
    for b in basis:
        if spec.product(e, b) != b or spec.product(b, e) != b:
            raise AssociativityError("unit law fails in the associative algebra")


def from_associative(spec: AlgebraSpec, name=None) -> AlgebraSpec:
    """The Jordan algebra A+ with product (xy + yx)/2."""
    check_associative(spec)
    k = spec.dim
    half = Fraction(1, 2)
    table = [
        [
            [normalize(half * (a + b)) for a, b in zip(spec.table[i][j], spec.table[j][i])]
            for j in range(k)
        ]
        for i in range(k)
    ]
    return AlgebraSpec(k, table, spec.unit, name=name or (spec.name + "+" if spec.name else ""))


def opposite(spec: AlgebraSpec, name="") -> AlgebraSpec:
    k = spec.dim
    return AlgebraSpec(k, _table_from_products(k, lambda i, j: spec.table[j][i]), spec.unit,
                       name=name)


def direct_product(s1: AlgebraSpec, s2: AlgebraSpec, name="") -> AlgebraSpec:
    k1, k2 = s1.dim, s2.dim
    k = k1 + k2
    zero = [0] * k

    def prod(i, j):
        if i < k1 and j < k1:
            return list(s1.table[i][j]) + [0] * k2
        if i >= k1 and j >= k1:
            return [0] * k1 + list(s2.table[i - k1][j - k1])
        return zero

    return AlgebraSpec(k, _table_from_products(k, prod), list(s1.unit) + list(s2.unit),
                       name=name)


def spin_factor(B, name="") -> AlgebraSpec:
    """``Q + W`` with ``(l, y)(l', y') = (l l' - B(y, y'), l y' + l' y)``; basis (1, w_1..w_n)."""
    B = [[to_scalar(c) for c in row] for row in B]
    n = len(B)
    if any(len(row) != n for row in B):
        raise InputError("B must be a square matrix")
    if any(B[i][j] != B[j][i] for i in range(n) for j in range(n)):
        raise InputError("B must be symmetric")
    k = n + 1

    def prod(i, j):
        v = [0] * k
        if i == 0:
            v[j] = 1
        elif j == 0:
            v[i] = 1
        else:
            v[0] = -B[i - 1][j - 1]
        return v

    return AlgebraSpec(k, _table_from_products(k, prod), basis_vector(0, k), name=name)


@dataclass(frozen=True)
class CompositionAlgebraSpec:
    """A (possibly non-associative) unital algebra with a conjugation ``x -> conj_matrix x``."""

    spec: AlgebraSpec
    conj_matrix: tuple

    @property
    def dim(self):
        return self.spec.dim

    def mul(self, x, y):
        return self.spec.product(x, y)

    def conjugate(self, x):
        out = []
        for row in self.conj_matrix:
            acc = 0
            for c, a in zip(row, x):
                if c != 0 and a:
                    acc = acc + c * a
            out.append(acc)
        return out

    def norm_of(self, x):
        """Scalar ``n`` with ``x conj(x) = n * 1`` (raises if not a unit multiple)."""
        return scalar_part(self, self.mul(x, self.conjugate(x)))

    def check_composition(self):
        """Symbolic check that ``x conj(x)`` is a multiple of the unit."""
        x = variables(self.dim)
        for v in (self.mul(x, self.conjugate(x)), self.mul(self.conjugate(x), x)):
            try:
                n = scalar_part(self, v)
            except CompositionError:
                raise CompositionError("x * conj(x) is not a multiple of the unit") from None
        return n


def scalar_part(C: CompositionAlgebraSpec, v):
    """Return ``a`` when ``v == a * unit``; raise otherwise."""
    unit = C.spec.unit
    i = next(idx for idx, u in enumerate(unit) if u != 0)
    a = v[i] if unit[i] == 1 else v[i] / Fraction(unit[i])
    if not vzero(vsub(v, [a * u for u in unit])):
        raise CompositionError("element is not a multiple of the unit")
    return a


def _cayley_dickson(H: CompositionAlgebraSpec, gamma=1) -> CompositionAlgebraSpec:
    """``(a,b)(c,d) = (ac + gamma conj(d) b, d a + b conj(c))``, ``conj(a,b) = (conj a, -b)``."""
    h = H.dim
    k = 2 * h

    def split(v):
        return list(v[:h]), list(v[h:])

    def prod(i, j):
        a, b = split(basis_vector(i, k))
        c, d = split(basis_vector(j, k))
        left = [p + gamma * q for p, q in zip(H.mul(a, c), H.mul(H.conjugate(d), b))]
        right = [p + q for p, q in zip(H.mul(d, a), H.mul(b, H.conjugate(c)))]
        return left + right

    conj = []
    for r in range(k):
        row = [0] * k
        if r < h:
            for c in range(h):
                row[c] = H.conj_matrix[r][c]
        else:
            row[r] = -1
        conj.append(row)
    spec = AlgebraSpec(k, _table_from_products(k, prod), list(H.spec.unit) + [0] * h,
                       name="split-octonions")
    return CompositionAlgebraSpec(spec, tuple(tuple(r) for r in conj))


def composition_algebra(dim: int) -> CompositionAlgebraSpec:
    """Split rational forms: Q, Q x Q, M2(Q), split octonions."""
    if dim == 1:
        spec = AlgebraSpec(1, [[[1]]], [1], name="Q")
        return CompositionAlgebraSpec(spec, ((1,),))
    if dim == 2:
        # idempotents e1, e2; conjugation swaps them
        spec = AlgebraSpec(2, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1], name="QxQ")
        return CompositionAlgebraSpec(spec, ((0, 1), (1, 0)))
    if dim == 4:
        # basis E11, E12, E21, E22
        keys = [(0, 0), (0, 1), (1, 0), (1, 1)]

        def prod(i, j):
            (a, b), (c, d) = keys[i], keys[j]
            v = [0] * 4
            if b == c:
                v[keys.index((a, d))] = 1
            return v

        spec = AlgebraSpec(4, _table_from_products(4, prod), [1, 0, 0, 1], name="M2")
        # adjugate: [[a,b],[c,d]] -> [[d,-b],[-c,a]]
        conj = ((0, 0, 0, 1), (0, -1, 0, 0), (0, 0, -1, 0), (1, 0, 0, 0))
        return CompositionAlgebraSpec(spec, conj)
    if dim == 8:
        return _cayley_dickson(composition_algebra(4))
    raise InputError("composition algebras exist only in dimensions 1, 2, 4, 8")


def hermitian_h3(C: CompositionAlgebraSpec, name="") -> AlgebraSpec:
    """Hermitian 3x3 matrices over ``C`` with product (MN + NM)/2.

    Coordinates: ``(r1, r2, r3, x1, x2, x3)`` for the matrix
    ``[[r1, x3*, x2*], [x3, r2, x1*], [x2, x1, r3]]``.
    """
    C.check_composition()
    c = C.dim
    k = 3 + 3 * c
    unit_c = list(C.spec.unit)
    zero_c = [0] * c
    # (row, col) of the lower entry holding x1, x2, x3
    slots = {0: (2, 1), 1: (2, 0), 2: (1, 0)}

    def to_matrix(v):
        m = [[zero_c for _ in range(3)] for _ in range(3)]
        for a in range(3):
            m[a][a] = [v[a] * u for u in unit_c]
        for s, (r, col) in slots.items():
            entry = list(v[3 + s * c: 3 + (s + 1) * c])
            m[r][col] = entry
            m[col][r] = C.conjugate(entry)
        return m

    def matmul(m, n):
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = zero_c
                for l in range(3):
                    if any(m[i][l]) and any(n[l][j]):
                        acc = [p + q for p, q in zip(acc, C.mul(m[i][l], n[l][j]))]
                row.append(acc)
            out.append(row)
        return out

    def from_matrix(m):
        v = [0] * k
        for a in range(3):
            v[a] = scalar_part(C, m[a][a])
        for s, (r, col) in slots.items():
            if C.conjugate(m[r][col]) != m[col][r]:
                raise CompositionError("product left the Hermitian matrices")
            v[3 + s * c: 3 + (s + 1) * c] = m[r][col]
        return v

    mats = [to_matrix(basis_vector(i, k)) for i in range(k)]
    half = Fraction(1, 2)

    def prod(i, j):
        mn = matmul(mats[i], mats[j])
        nm = matmul(mats[j], mats[i])
        sym = [[[normalize(half * (p + q)) for p, q in zip(mn[a][b], nm[a][b])]
                for b in range(3)] for a in range(3)]
        return from_matrix(sym)

    table = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            table[i][j] = table[j][i] = prod(i, j)
    unit = [1, 1, 1] + [0] * (3 * c)
    return AlgebraSpec(k, table, unit, name=name)
