"""Named algebras with documented bases and reference adjoint/norm forms.

Basis conventions (coordinates x1..xk refer to these, in order):

* A1 = Q x Q x Q: the three idempotents.
* A2 = Q x Q[X]/(X^2): (1 of Q, 1, X).
* A3 = Q[X]/(X^3): (1, X, X^2).
* A6 = Q x Q[X,Y]/(X,Y)^2: (1 of Q, 1, X, Y).
* A7 = Q[X,Y]/(X^2,Y^2): (1, X, Y, XY).
* A8 = Q[X,Y]/(X^3,XY,Y^2): (1, X, Y, X^2).
* A13 = Q x (upper triangular 2x2): (1 of Q, E11, E12, E22).
* A14 = {[[a,0,0],[c,a,0],[d,0,b]]}: (a, b, c, d); A15 is its opposite.
* A18(l) = Q<X,Y>/(X^2, Y^2, YX - l XY): (1, X, Y, XY).
* A19 = Q<X,Y>/(Y^2, X^2+YX, XY+YX): (1, X, Y, YX).
* Jstar: the explicit product on Q^4 with unit (-1, 1, 0, 0).
* CxJprime(r): Q x (spin factor on Q^(r-1) with B = identity): (1 of Q, 1, w_1..w_(r-1)).
* Spin(w): spin factor with B = identity on Q^w; Spin([[..]]) takes B explicitly.
* H3R/H3C/H3H/H3O: Hermitian 3x3 matrices over the split composition algebras
  of dimension 1, 2, 4, 8, coordinates (r1, r2, r3, x1, x2, x3).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .config import DEFAULT, RunConfig
from .core.linalg import solve
from .core.poly import Poly, variables
from .core.scalar import fmt_scalar, to_scalar
from .errors import InputError, UnknownAlgebra
from .jordan import (
    AlgebraSpec,
    JordanAlgebra,
    composition_algebra,
    direct_product,
    from_associative,
    hermitian_h3,
    opposite,
    spin_factor,
    validate,
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: AlgebraSpec
    reference_adjoint: tuple | None
    reference_norm: Poly | None
    provenance: str
    algebra: JordanAlgebra = field(compare=False, repr=False, default=None)

    @property
    def dim(self):
        return self.spec.dim

    @property
    def rank(self):
        return self.algebra.rank

    def to_json(self):
        out = {"name": self.name, "provenance": self.provenance, "spec": self.spec.to_json()}
        if self.reference_adjoint is not None:
            out["reference_adjoint"] = [p.format() for p in self.reference_adjoint]
        if self.reference_norm is not None:
            out["reference_norm"] = self.reference_norm.format()
        return out


# -- table builders -----------------------------------------------------------


def _monomial_algebra(k, rules, name):
    """Table from ``rules[(i, j)] = {l: coef}``; unspecified products are zero. Basis 0 is the unit."""
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            v = [0] * k
            if i == 0:
                v[j] = 1
            elif j == 0:
                v[i] = 1
            else:
                for l, c in rules.get((i, j), {}).items():
                    v[l] = c
            row.append(v)
        table.append(row)
    unit = [1] + [0] * (k - 1)
    return AlgebraSpec(k, table, unit, name=name)


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][l] * b[l][j] for l in range(n)) for j in range(n)] for i in range(n)]


def matrix_algebra(basis, unit_coords, name=""):
    """Structure constants of a subalgebra of n x n matrices spanned by ``basis``."""
    k = len(basis)
    flat = [[m[i][j] for m in basis] for i in range(len(basis[0])) for j in range(len(basis[0]))]

    def coords(m):
        rhs = [m[i][j] for i in range(len(m)) for j in range(len(m))]
        try:
            return solve(flat, rhs)
        except ValueError:
            raise InputError("matrix basis is not closed under multiplication") from None

    table = [[coords(_matmul(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    return AlgebraSpec(k, table, unit_coords, name=name)


def _unit_matrix(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def _spec_a1():
    table = [[[1 if i == j == l else 0 for l in range(3)] for j in range(3)] for i in range(3)]
    return AlgebraSpec(3, table, [1, 1, 1], name="A1")


def _spec_a2():
    a = AlgebraSpec(1, [[[1]]], [1])
    b = _monomial_algebra(2, {}, "")
    return direct_product(a, b, name="A2")


def _spec_a3():
    return _monomial_algebra(3, {(1, 1): {2: 1}}, "A3")


def _spec_a6():
    a = AlgebraSpec(1, [[[1]]], [1])
    b = _monomial_algebra(3, {}, "")
    return direct_product(a, b, name="A6")


def _spec_a7():
    return _monomial_algebra(4, {(1, 2): {3: 1}, (2, 1): {3: 1}}, "A7")


def _spec_a8():
    return _monomial_algebra(4, {(1, 1): {3: 1}}, "A8")


def _assoc_a13():
    e = lambda i, j: _unit_matrix(3, i, j)  # noqa: E731
    # block diag(Q, upper triangular 2x2)
    basis = [e(0, 0), e(1, 1), e(1, 2), e(2, 2)]
    return matrix_algebra(basis, [1, 1, 0, 1], name="A13")


def _assoc_a14():
    e = lambda i, j: _unit_matrix(3, i, j)  # noqa: E731
    a = [[1, 0, 0], [0, 1, 0], [0, 0, 0]]
    basis = [a, e(2, 2), e(1, 0), e(2, 0)]
    return matrix_algebra(basis, [1, 1, 0, 0], name="A14")


def _assoc_a18(lam):
    return _monomial_algebra(4, {(1, 2): {3: 1}, (2, 1): {3: lam}}, f"A18({fmt_scalar(lam)})")


def _assoc_a19():
    return _monomial_algebra(
        4, {(1, 1): {3: -1}, (1, 2): {3: -1}, (2, 1): {3: 1}}, "A19"
    )


def _spec_jstar():
    # product (-x1y1, x2y2, x4y4 - x1y3 - x3y1, (x2y4 + x4y2 - x1y4 - x4y1)/2)
    half = Fraction(1, 2)
    x, y = variables(8)[:4], variables(8)[4:]
    prod = [
        -x[0] * y[0],
        x[1] * y[1],
        x[3] * y[3] - x[0] * y[2] - x[2] * y[0],
        (x[1] * y[3] + x[3] * y[1] - x[0] * y[3] - x[3] * y[0]) * half,
    ]
    # coefficient of x_i y_j in each component
    table = [
        [[p.coefficient(tuple(int(v in (i, 4 + j)) for v in range(8))) for p in prod]
         for j in range(4)]
        for i in range(4)
    ]
    return AlgebraSpec(4, table, [-1, 1, 0, 0], name="Jstar")


def _spec_cxjprime(r):
    if r < 2:
        raise InputError("CxJprime(r) needs r >= 2")
    w = r - 1
    eye = [[1 if i == j else 0 for j in range(w)] for i in range(w)]
    a = AlgebraSpec(1, [[[1]]], [1])
    return direct_product(a, spin_factor(eye), name=f"CxJprime({r})")


# -- reference forms ----------------------------------------------------------


def _forms(k, build):
    x = [None] + variables(k)  # 1-based to match the documented coordinates
    adj, norm = build(x)
    return tuple(adj), norm


_REFERENCE = {
    "A1": (3, lambda x: ((x[2] * x[3], x[1] * x[3], x[1] * x[2]), x[1] * x[2] * x[3])),
    "A3": (3, lambda x: ((x[1] ** 2, -x[1] * x[2], x[2] ** 2 - x[1] * x[3]), x[1] ** 3)),
    "A6": (4, lambda x: ((x[2] ** 2, x[1] * x[2], -x[1] * x[3], -x[1] * x[4]),
                         x[1] * x[2] ** 2)),
    "A7": (4, lambda x: ((x[1] ** 2, -x[1] * x[2], -x[1] * x[3],
                          2 * x[2] * x[3] - x[1] * x[4]), x[1] ** 3)),
    "A8": (4, lambda x: ((x[1] ** 2, -x[1] * x[2], -x[1] * x[3],
                          x[2] ** 2 - x[1] * x[4]), x[1] ** 3)),
    "A13": (4, lambda x: ((x[2] * x[4], x[1] * x[4], -x[1] * x[3], x[1] * x[2]),
                          x[1] * x[2] * x[4])),
    "A14": (4, lambda x: ((x[1] * x[2], x[1] ** 2, -x[2] * x[3], -x[1] * x[4]),
                          x[1] ** 2 * x[2])),
    "Jstar": (4, lambda x: ((x[1] * x[2], x[1] ** 2, x[4] ** 2 - x[2] * x[3], x[1] * x[4]),
                            x[1] ** 2 * x[2])),
}
_REFERENCE["A15"] = _REFERENCE["A14"]


def _cxjprime_reference(r):
    k = r + 1

    def build(x):
        q = x[2] ** 2
        for i in range(3, k + 1):
            q = q + x[i] ** 2
        adj = [q, x[1] * x[2]] + [-x[1] * x[i] for i in range(3, k + 1)]
        return adj, x[1] * q

    return _forms(k, build)


_PROVENANCE = {
    "A1": "commutative associative, dim 3; cubic curve is the Segre P1xP1xP1 in P7",
    "A2": "commutative associative, dim 3; cubic curve is the Segre P1 x S02",
    "A3": "commutative associative, dim 3; local algebra Q[X]/(X^3)",
    "A6": "commutative associative, dim 4; cubic curve is P1 x S002",
    "A7": "commutative associative, dim 4; local algebra Q[X,Y]/(X^2,Y^2)",
    "A8": "commutative associative, dim 4; local algebra Q[X,Y]/(X^3,XY,Y^2)",
    "A13": "A+ of a triangular matrix algebra, dim 4; cubic curve is P1 x S011",
    "A14": "A+ of a triangular matrix algebra, dim 4",
    "A15": "A+ of the opposite of A14; equal to A14+",
    "A18": "A+ of Q<X,Y>/(X^2,Y^2,YX-lXY), dim 4; isomorphic to A7",
    "A19": "A+ of Q<X,Y>/(Y^2,X^2+YX,XY+YX), dim 4; isomorphic to A8",
    "Jstar": "non-special-looking dim-4 cubic Jordan algebra given by an explicit product",
    "CxJprime": "Q x rank-2 spin factor; cubic curve is P1 x Q",
    "Spin": "spin factor of a symmetric bilinear form (rank 2)",
    "H3R": "simple rank 3, dim 6; cubic curve is the Lagrangian grassmannian LG(3,6) in P13",
    "H3C": "simple rank 3, dim 9; cubic curve is the grassmannian G(3,6) in P19",
    "H3H": "simple rank 3, dim 15; cubic curve is the spinor variety S6 in P31",
    "H3O": "simple rank 3, dim 27; cubic curve is the 27-dimensional E7-variety in P55",
}

DEFAULT_NAMES = (
    "A1", "A2", "A3", "A6", "A7", "A8", "A13", "A14", "A15", "A18(2)", "A19",
    "Jstar", "CxJprime(3)", "Spin(3)", "H3R", "H3C", "H3H", "H3O",
)
ALIASES = {"CxCxC": "A1", "CxJ'": "CxJprime(3)", "CxJprime": "CxJprime(3)"}

_H3 = {"H3R": 1, "H3C": 2, "H3H": 4, "H3O": 8}
_NAME_RE = re.compile(r"^([A-Za-z0-9]+?)(?:\((.*)\))?$")


def _parse_matrix(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse matrix {text!r}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("B must be a JSON list of rows")
    return [[to_scalar(c) for c in row] for row in data]


def _build(base, arg, name):
    """Return (spec, reference forms or None, provenance key)."""
    if arg is None:
        builders = {
            "A1": _spec_a1, "A2": _spec_a2, "A3": _spec_a3, "A6": _spec_a6,
            "A7": _spec_a7, "A8": _spec_a8, "Jstar": _spec_jstar,
            "A13": lambda: from_associative(_assoc_a13(), name="A13"),
            "A14": lambda: from_associative(_assoc_a14(), name="A14"),
            "A15": lambda: from_associative(opposite(_assoc_a14(), name="A15"), name="A15"),
            "A19": lambda: from_associative(_assoc_a19(), name="A19"),
        }
        if base in builders:
            ref = _forms(*_REFERENCE[base]) if base in _REFERENCE else None
            return builders[base](), ref
        if base in _H3:
            spec = hermitian_h3(composition_algebra(_H3[base]), name=base)
            return spec, None
        raise UnknownAlgebra(f"unknown algebra {name!r}")
    if base == "A18":
        lam = to_scalar(arg)
        if lam == 1:
            raise InputError("A18 needs lambda != 1", module="catalog", operation="catalog_get")
        if lam == -1:
            raise InputError("A18(-1)+ has rank 2, not 3", module="catalog",
                             operation="catalog_get")
        return from_associative(_assoc_a18(lam), name=name), None
    if base == "CxJprime":
        r = _int_arg(arg, name)
        return _spec_cxjprime(r), _cxjprime_reference(r)
    if base == "Spin":
        if arg.strip().startswith("["):
            B = _parse_matrix(arg)
        else:
            w = _int_arg(arg, name)
            if w < 1:
                raise InputError("Spin(w) needs w >= 1")
            B = [[1 if i == j else 0 for j in range(w)] for i in range(w)]
        return spin_factor(B, name=name), None
    raise UnknownAlgebra(f"unknown algebra {name!r}")


def _int_arg(arg, name):
    try:
        return int(arg)
    except ValueError:
        raise InputError(f"{name}: expected an integer parameter") from None


def canonical_name(name: str) -> str:
    name = name.strip()
    return ALIASES.get(name, name)


def catalog_get(name: str, config: RunConfig = DEFAULT) -> CatalogEntry:
    """Build, validate and return a catalog entry (cached per name and config)."""
    return _catalog_get(canonical_name(name), config)


@lru_cache(maxsize=None)
def _catalog_get(name, config):
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownAlgebra(f"unknown algebra {name!r}")
    base, arg = m.group(1), m.group(2)
    spec, ref = _build(base, arg, name)
    if spec.name != name:
        spec = AlgebraSpec(spec.dim, spec.table, spec.unit, name=name)
    J = validate(spec, config=config)
    adj, norm = ref if ref else (None, None)
    return CatalogEntry(name, spec, adj, norm, _PROVENANCE[base], J)


def catalog_list(config: RunConfig = DEFAULT):
    """``(name, dim, rank, provenance)`` for the default entries, in a fixed order."""
    out = []
    for name in DEFAULT_NAMES:
        e = catalog_get(name, config)
        out.append((e.name, e.dim, e.rank, e.provenance))
    return out


def cubic_names(max_dim=None, config: RunConfig = DEFAULT):
    """Default entries of rank 3, optionally bounded in dimension."""
    out = []
    for name in DEFAULT_NAMES:
        if name.startswith("Spin"):
            continue
        e = catalog_get(name, config)
        if max_dim is None or e.dim <= max_dim:
            out.append(name)
    return out


def load_algebra(name_or_path: str, config: RunConfig = DEFAULT) -> JordanAlgebra:
    """A catalog name, or a path to a JSON algebra spec."""
    try:
        return catalog_get(name_or_path, config).algebra
    except UnknownAlgebra:
        pass
    try:
        with open(name_or_path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise UnknownAlgebra(f"unknown algebra {name_or_path!r} (no catalog entry or file)") \
            from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{name_or_path}: malformed JSON at line {exc.lineno} "
                         f"column {exc.colno}: {exc.msg}") from exc
    spec = AlgebraSpec.from_json(data, name=str(name_or_path))
    return validate(spec, config=config)
