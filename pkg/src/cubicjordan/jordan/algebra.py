"""Finite-dimensional unital algebras from structure constants, and Jordan algebras.

Vectors are plain sequences whose entries may be rationals, ``Poly`` objects
or ``QuadScalar`` values; every operation here is written against that
generic ring interface so the same code evaluates pointwise or symbolically.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from ..config import DEFAULT, RunConfig, random_vector
from ..core.linalg import rank as mat_rank
from ..core.linalg import solve
from ..core.poly import Poly, monomials, poly_sum, variables
from ..core.scalar import fmt_scalar, normalize, to_scalar
from ..errors import (
    CommutativityError,
    InputError,
    InterpolationFailure,
    JordanIdentityError,
    NotInvertible,
    RankError,
    UnitLawError,
    VerificationError,
)


def _is_zero(v):
    return not v


def _divide(a, n):
    if isinstance(a, (int, Fraction)):
        return normalize(Fraction(a) / n)
    return a / n


def vadd(x, y):
    return [a + b for a, b in zip(x, y)]


def vsub(x, y):
    return [a - b for a, b in zip(x, y)]


def vscale(c, x):
    return [c * a for a in x]


def vzero(x):
    return all(_is_zero(a) for a in x)


def basis_vector(i, k):
    return [1 if j == i else 0 for j in range(k)]


def _sum_entries(items, like):
    """Sum ring elements, using the in-place polynomial path when possible."""
    polys = [it for it in items if isinstance(it, Poly)]
    if polys:
        return poly_sum(items, polys[0].nvars)
    total = 0
    for it in items:
        total = total + it
    return normalize(total) if isinstance(total, Fraction) else total


@dataclass(frozen=True)
class AlgebraSpec:
    """Structure constants ``b_i b_j = sum_l table[i][j][l] b_l`` plus a unit vector.

    The table need not be symmetric here (associative input to
    ``from_associative`` is not); the Jordan checks live in ``validate``.
    """

    dim: int
    table: tuple
    unit: tuple
    name: str = ""
    _nz: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        k = self.dim
        if k < 1:
            raise InputError("algebra dimension must be >= 1")
        try:
            table = tuple(
                tuple(tuple(to_scalar(c) for c in self.table[i][j]) for j in range(k))
                for i in range(k)
            )
            unit = tuple(to_scalar(c) for c in self.unit)
        except (IndexError, TypeError, ValueError) as exc:
            raise InputError(f"malformed structure table: {exc}") from exc
        if len(self.table) != k or any(len(row) != k for row in self.table):
            raise InputError(f"table must be {k}x{k}")
        if any(len(v) != k for row in table for v in row) or len(unit) != k:
            raise InputError(f"coefficient vectors must have length {k}")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "unit", unit)
        nz = []
        for i in range(k):
            for j in range(k):
                col = tuple((l, c) for l, c in enumerate(table[i][j]) if c != 0)
                if col:
                    nz.append((i, j, col))
        object.__setattr__(self, "_nz", tuple(nz))

    def product(self, x, y):
        """Bilinear extension of the table (order matters)."""
        k = self.dim
        if len(x) != k or len(y) != k:
            raise InputError(f"vectors must have length {k}")
        buckets = [[] for _ in range(k)]
        cache = {}
        for i, j, col in self._nz:
            xi = x[i]
            if _is_zero(xi):
                continue
            yj = y[j]
            if _is_zero(yj):
                continue
            key = (i, j)
            prod = cache.get(key)
            if prod is None:
                prod = xi * yj
                cache[key] = prod
            for l, c in col:
                buckets[l].append(prod if c == 1 else c * prod)
        return [_sum_entries(b, x) for b in buckets]

    def is_commutative(self) -> bool:
        k = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(k) for j in range(i))

    def to_json(self):
        return {
            "dim": self.dim,
            "unit": [fmt_scalar(c) for c in self.unit],
            "table": [[[fmt_scalar(c) for c in v] for v in row] for row in self.table],
        }

    @classmethod
    def from_json(cls, data, name=""):
        try:
            return cls(int(data["dim"]), data["table"], data["unit"], name=name)
        except (KeyError, TypeError) as exc:
            raise InputError(f"algebra JSON needs dim, unit and table: {exc}") from exc


@dataclass(frozen=True)
class GenericMinPoly:
    """``x^m - s1(x) x^(m-1) + ... + (-1)^m s_m(x) e = 0`` with ``s_i`` homogeneous of degree i."""

    m: int
    sigma: tuple

    def to_json(self):
        return [s.to_json() for s in self.sigma]

    @property
    def trace(self) -> Poly:
        return self.sigma[0]

    @property
    def norm(self) -> Poly:
        return self.sigma[-1]


class JordanAlgebra:
    """A validated unital commutative Jordan algebra.

    Construct through :func:`validate`. Rank, trace coefficients and the
    symbolic generic minimum polynomial are computed lazily, at most once.
    """

    def __init__(self, spec: AlgebraSpec, jordan_identity: str, config: RunConfig = DEFAULT):
        self.spec = spec
        self.jordan_identity = jordan_identity
        self.config = config
        self._lock = threading.RLock()
        self._cache = {}

    def __repr__(self):
        return f"JordanAlgebra({self.spec.name or 'unnamed'}, dim={self.dim})"

    def _once(self, key, fn):
        value = self._cache.get(key)
        if value is None:
            with self._lock:
                value = self._cache.get(key)
                if value is None:
                    value = fn()
                    self._cache[key] = value
        return value

    @property
    def dim(self) -> int:
        return self.spec.dim

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def unit(self):
        return list(self.spec.unit)

    def mul(self, x, y):
        return self.spec.product(x, y)

    def powers(self, x, n):
        """``[e, x, x^2, ..., x^n]`` (power associativity)."""
        out = [self.unit, list(x)]
        for _ in range(n - 1):
            out.append(self.mul(x, out[-1]))
        return out[: n + 1]

    # -- rank -----------------------------------------------------------
    def krylov_dim(self, x) -> int:
        vecs = [self.unit]
        cur = list(x)
        for _ in range(self.dim):
            if mat_rank(vecs + [cur]) == len(vecs):
                break
            vecs.append(cur)
            cur = self.mul(x, cur)
        return len(vecs)

    @property
    def rank(self) -> int:
        def compute():
            rng = self.config.rng(f"rank:{self.name}")
            best = 1
            for _ in range(max(4, self.config.samples // 4)):
                x = random_vector(rng, self.dim, self.config.sample_bound)
                best = max(best, self.krylov_dim(x))
            return best

        return self._once("rank", compute)

    def relation(self, x):
        """Pointwise minimum polynomial data: ``[s1(x), ..., s_m(x)]`` or None if degenerate."""
        m = self.rank
        pw = self.powers(x, m)
        cols = pw[:m]
        if mat_rank(cols) < m:
            return None
        a = [[cols[i][r] for i in range(m)] for r in range(self.dim)]
        coeffs = solve(a, pw[m])
        # x^m = sum a_i x^i  <=>  s_i = (-1)^(i+1) a_(m-i)
        return [normalize((-1) ** (i + 1) * Fraction(coeffs[m - i])) for i in range(1, m + 1)]

    def generic_points(self, count, label):
        """``count`` seeded points at which the pointwise relation has full degree."""
        rng = self.config.rng(f"generic:{self.name}:{label}")
        pts = []
        attempts = 0
        limit = count * self.config.retry_limit
        while len(pts) < count:
            attempts += 1
            if attempts > limit:
                raise InterpolationFailure(
                    f"could not find {count} generic points for {self.name or 'algebra'}"
                )
            x = random_vector(rng, self.dim, self.config.sample_bound)
            rel = self.relation(x)
            if rel is not None:
                pts.append((x, rel))
        return pts

    # -- trace, sigma, norm, adjoint -----------------------------------------
    @property
    def trace_coefficients(self):
        """Coefficients ``t`` with ``T(x) = sum t_l x_l``."""

        def compute():
            k = self.dim
            for attempt in range(self.config.retry_limit):
                pts = self.generic_points(k, f"trace:{attempt}")
                try:
                    return tuple(solve([p for p, _ in pts], [rel[0] for _, rel in pts]))
                except ValueError:
                    continue
            raise InterpolationFailure("trace interpolation failed after retry budget")

        return self._once("trace", compute)

    def _apply_trace(self, v):
        t = self.trace_coefficients
        return _sum_entries([c * a for c, a in zip(t, v) if c != 0 and not _is_zero(a)], v)

    def _sigmas_from_powers(self, pw):
        m = self.rank
        p = [None] + [self._apply_trace(pw[j]) for j in range(1, m + 1)]
        sig = [1]
        for i in range(1, m + 1):
            s = _sum_entries(
                [(-1) ** (j - 1) * sig[i - j] * p[j] for j in range(1, i + 1)], pw[0]
            )
            sig.append(_divide(s, i))
        return sig

    def sigmas(self, x):
        """``[1, s1(x), ..., s_m(x)]`` by Newton's identities on power traces."""
        fast = self._cache.get("gmp")
        if fast is not None and not any(isinstance(a, Poly) for a in x):
            return [1] + [s.evaluate(list(x)) for s in fast.sigma]
        return self._sigmas_from_powers(self.powers(x, self.rank))

    def trace(self, x):
        return self._apply_trace(x)

    def trace_form(self, x, y):
        """``T(x y)``."""
        return self._apply_trace(self.mul(x, y))

    def norm(self, x):
        return self.sigmas(x)[-1]

    def adjoint(self, x):
        """``x^# = sum_{i<m} s_i(x) (-x)^(m-1-i)``."""
        m = self.rank
        pw = self.powers(x, m)
        sig = self._sigmas_from_powers(pw)
        out = [0] * self.dim
        for i in range(m):
            j = m - 1 - i
            c = sig[i] * (-1) ** j
            out = vadd(out, vscale(c, pw[j]))
        return [normalize(a) if isinstance(a, Fraction) else a for a in out]

    def norm_and_adjoint(self, x):
        m = self.rank
        pw = self.powers(x, m)
        sig = self._sigmas_from_powers(pw)
        out = [0] * self.dim
        for i in range(m):
            j = m - 1 - i
            out = vadd(out, vscale(sig[i] * (-1) ** j, pw[j]))
        return sig[m], out

    def invert(self, x):
        n, adj = self.norm_and_adjoint(x)
        if _is_zero(n):
            raise NotInvertible(
                "element has zero generic norm", witness=[str(a) for a in x]
            )
        return [_divide(a, n) if isinstance(a, (int, Fraction)) else a / n for a in adj]

    def sharp_bilinear(self, x, y):
        """``x # y = (x+y)^# - x^# - y^#``."""
        return vsub(vsub(self.adjoint(vadd(x, y)), self.adjoint(x)), self.adjoint(y))

    def is_invertible(self, x) -> bool:
        return not _is_zero(self.norm(x))

    # -- symbolic forms ----------------------------------------------------------
    def generic_min_poly(self, certify=None) -> GenericMinPoly:
        """Symbolic ``s_1..s_m`` (cached). ``certify`` in {None, "symbolic", "sampled", False}."""

        def compute():
            x = variables(self.dim)
            sig = self._sigmas_from_powers(self.powers(x, self.rank))
            forms = tuple(
                s if isinstance(s, Poly) else Poly.const(s, self.dim) for s in sig[1:]
            )
            return GenericMinPoly(self.rank, forms)

        gmp = self._once("gmp", compute)
        mode = certify
        if mode is None:
            mode = "symbolic" if self.dim <= self.config.symbolic_dim_threshold else "sampled"
        if mode:
            key = f"gmp_cert:{mode}"
            if key not in self._cache:
                certify_min_poly(self, gmp, mode)
                self._cache[key] = True
        return gmp

    def norm_form(self) -> Poly:
        return self.generic_min_poly().norm

    def adjoint_form(self):
        def compute():
            return tuple(
                a if isinstance(a, Poly) else Poly.const(a, self.dim)
                for a in self.adjoint(variables(self.dim))
            )

        return self._once("adjoint_form", compute)

    def certificate(self):
        gmp = self.generic_min_poly()
        return {
            "jordan_identity": self.jordan_identity,
            "rank": self.rank,
            "sigma": gmp.to_json(),
        }


def certify_min_poly(J: JordanAlgebra, gmp: GenericMinPoly, mode: str = "symbolic"):
    """Check homogeneity and the minimum-polynomial identity; raises on failure."""
    m = gmp.m
    for i, s in enumerate(gmp.sigma, start=1):
        if not s.is_homogeneous(i):
            raise VerificationError(f"sigma_{i} is not homogeneous of degree {i}",
                                    module="jordan", operation="generic_min_poly")

    def residual(x, sig):
        pw = J.powers(x, m)
        out = list(pw[m])
        for i in range(1, m + 1):
            out = vadd(out, vscale((-1) ** i * sig[i - 1], pw[m - i]))
        return out

    if mode == "symbolic":
        x = variables(J.dim)
        res = residual(x, list(gmp.sigma))
        if not vzero(res):
            raise VerificationError("generic minimum polynomial identity fails symbolically",
                                    module="jordan", operation="generic_min_poly")
        return True
    rng = J.config.rng(f"certify-minpoly:{J.name}")
    for _ in range(64):
        x = random_vector(rng, J.dim, J.config.sample_bound)
        sig = [s.evaluate(x) for s in gmp.sigma]
        if not vzero(residual(x, sig)):
            raise VerificationError("generic minimum polynomial identity fails at a sample",
                                    witness=[str(a) for a in x],
                                    module="jordan", operation="generic_min_poly")
    return True


def interpolate_min_poly(J: JordanAlgebra) -> GenericMinPoly:
    """Fit each ``s_i`` as a degree-i form from pointwise relations at seeded points.

    Independent of the power-trace route in :meth:`JordanAlgebra.generic_min_poly`;
    practical for small dimensions only (one dense solve per degree).
    """
    m, k = J.rank, J.dim
    sigma = []
    for i in range(1, m + 1):
        monos = monomials(k, i)
        for attempt in range(J.config.retry_limit):
            pts = J.generic_points(len(monos), f"interp:{i}:{attempt}")
            rows = []
            for x, _ in pts:
                row = []
                for e in monos:
                    v = 1
                    for xi, a in zip(x, e):
                        if a:
                            v *= xi**a
                    row.append(v)
                rows.append(row)
            try:
                coeffs = solve(rows, [rel[i - 1] for _, rel in pts])
            except ValueError:
                continue
            sigma.append(Poly(k, dict(zip(monos, coeffs))))
            break
        else:
            raise InterpolationFailure(f"could not interpolate sigma_{i}")
    return GenericMinPoly(m, tuple(sigma))


# -- validation ---------------------------------------------------------------


def _check_commutative(spec):
    k = spec.dim
    for i in range(k):
        for j in range(i):
            if spec.table[i][j] != spec.table[j][i]:
                raise CommutativityError(
                    f"b{i + 1}*b{j + 1} != b{j + 1}*b{i + 1}", witness={"i": i + 1, "j": j + 1}
                )


def _check_unit(spec):
    e = list(spec.unit)
    for i in range(spec.dim):
        b = basis_vector(i, spec.dim)
        if spec.product(e, b) != b or spec.product(b, e) != b:
            raise UnitLawError(f"e*b{i + 1} != b{i + 1}", witness={"i": i + 1})


def jordan_defect(spec, x, y):
    """``x^2 (y x) - (x^2 y) x``."""
    x2 = spec.product(x, x)
    return vsub(spec.product(x2, spec.product(y, x)), spec.product(spec.product(x2, y), x))


def _jordan_symbolic(spec, config):
    k = spec.dim
    x = variables(k)
    x2 = spec.product(x, x)
    for j in range(k):
        b = basis_vector(j, k)
        # linear in y, so the basis suffices
        d = vsub(spec.product(x2, spec.product(b, x)), spec.product(spec.product(x2, b), x))
        if not vzero(d):
            rng = config.rng(f"jordan-witness:{spec.name}")
            for _ in range(256):
                xs = random_vector(rng, k, config.sample_bound)
                if not vzero(jordan_defect(spec, xs, b)):
                    raise JordanIdentityError(
                        "Jordan identity fails",
                        witness={"x": [str(a) for a in xs], "y": [str(a) for a in b]},
                    )
            raise JordanIdentityError("Jordan identity fails symbolically",
                                      witness={"y": [str(a) for a in b]})


def _jordan_sampled(spec, config, samples=64):
    rng = config.rng(f"jordan-sampled:{spec.name}")
    for _ in range(samples):
        x = random_vector(rng, spec.dim, config.sample_bound)
        y = random_vector(rng, spec.dim, config.sample_bound)
        if not vzero(jordan_defect(spec, x, y)):
            raise JordanIdentityError(
                "Jordan identity fails",
                witness={"x": [str(a) for a in x], "y": [str(a) for a in y]},
            )


def validate(spec: AlgebraSpec, mode=None, config: RunConfig = DEFAULT) -> JordanAlgebra:
    """Check commutativity, the unit law and the Jordan identity.

    ``mode`` is "symbolic" or "sampled"; by default symbolic up to
    ``config.symbolic_dim_threshold`` dimensions.
    """
    if mode is None:
        mode = "symbolic" if spec.dim <= config.symbolic_dim_threshold else "sampled"
    if mode not in ("symbolic", "sampled"):
        raise InputError(f"unknown validation mode {mode!r}")
    _check_commutative(spec)
    _check_unit(spec)
    if mode == "symbolic":
        _jordan_symbolic(spec, config)
    else:
        _jordan_sampled(spec, config)
    return JordanAlgebra(spec, mode, config)


def require_rank(J: JordanAlgebra, m: int, operation: str):
    if J.rank != m:
        raise RankError(f"{operation} needs a rank-{m} algebra, got rank {J.rank}",
                        operation=operation)
