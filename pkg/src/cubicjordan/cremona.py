"""Quadro-quadric Cremona maps and symbolic certificates of the involution identity

    ell(phi(phi(x))) = n(x) x,    phi(ell(phi(y))) = m(y) y,    m(phi(x)) = n(x)^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT, RunConfig, random_nonzero_vector, random_vector
from .core.linalg import identity, rank as mat_rank
from .core.maps import RationalMap, line_restriction, proj_equal
from .core.poly import Poly, poly_sum
from .core.scalar import fmt_scalar, to_scalar
from .core.univariate import poly_gcd, rational_roots
from .errors import InputError, NotProportional
from .jordan import JordanAlgebra, require_rank


@dataclass(frozen=True)
class CremonaMap:
    """Quadratic forms ``phi_0..phi_r`` in ``r+1`` variables."""

    map: RationalMap

    def __post_init__(self):
        m = self.map
        if not isinstance(m, RationalMap):
            m = RationalMap(tuple(m))
            object.__setattr__(self, "map", m)
        if m.degree != 2:
            raise InputError(f"a quadro-quadric map has quadratic components, got degree {m.degree}")
        if len(m) != m.source_vars:
            raise InputError("a Cremona map of P^r needs r+1 components in r+1 variables")

    @property
    def components(self):
        return self.map.components

    @property
    def nvars(self):
        return self.map.source_vars

    def __call__(self, x):
        return self.map(x)

    def to_json(self):
        return self.map.to_json()

    def formatted(self):
        return [p.format() for p in self.components]


@dataclass(frozen=True)
class InvolutionCertificate:
    ell: tuple
    n_cubic: Poly
    m_cubic: Poly | None = None

    def to_json(self):
        out = {
            "ell": [[fmt_scalar(c) for c in row] for row in self.ell],
            "n": self.n_cubic.format(),
            "n_json": self.n_cubic.to_json(),
        }
        if self.m_cubic is not None:
            out["m"] = self.m_cubic.format()
            out["m_json"] = self.m_cubic.to_json()
        return out


def adjoint_cremona(J: JordanAlgebra) -> CremonaMap:
    """``x -> x^#`` as a tuple of quadratic forms."""
    require_rank(J, 3, "adjoint_cremona")
    return CremonaMap(RationalMap(tuple(J.adjoint_form())))


def _apply_matrix(ell, polys, nvars):
    out = []
    for row in ell:
        out.append(poly_sum([c * p for c, p in zip(row, polys) if c != 0], nvars))
    return out


def _parse_ell(ell, n):
    if ell is None:
        return identity(n)
    try:
        ell = [[to_scalar(c) for c in row] for row in ell]
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad matrix entry: {exc}") from exc
    if len(ell) != n or any(len(row) != n for row in ell):
        raise InputError(f"ell must be a {n}x{n} matrix")
    if mat_rank(ell) < n:
        raise InputError("ell must be invertible")
    return ell


def _proportionality_factor(psi, nvars, label, config):
    """Return ``c`` with ``psi = c * x`` as forms, checking all cross terms first."""
    x = [Poly.var(i, nvars) for i in range(nvars)]
    for i in range(nvars):
        for j in range(i + 1, nvars):
            if psi[i] * x[j] != psi[j] * x[i]:
                witness = _numeric_witness(psi, nvars, config)
                raise NotProportional(
                    f"{label} is not proportional to the identity "
                    f"(components {i + 1} and {j + 1} disagree)",
                    witness=witness,
                )
    i = next((i for i, p in enumerate(psi) if not p.is_zero()), None)
    if i is None:
        raise NotProportional(f"{label} vanishes identically")
    return psi[i].divide_by_variable(i)


def _numeric_witness(psi, nvars, config):
    rng = config.rng("involution-witness")
    for _ in range(64):
        x = random_nonzero_vector(rng, nvars, config.sample_bound)
        v = [p.evaluate(x) for p in psi]
        if all(a == 0 for a in v) or not proj_equal(v, x):
            return {"x": [fmt_scalar(a) for a in x], "image": [fmt_scalar(a) for a in v]}
    return None


def verify_involution(phi: CremonaMap, ell=None, config: RunConfig = DEFAULT,
                      with_companion=True) -> InvolutionCertificate:
    """Symbolic certificate of ``ell o phi o phi = n * id``, plus the companion cubic ``m``."""
    k = phi.nvars
    ell = _parse_ell(ell, k)
    comps = list(phi.components)
    phiphi = [p.compose(comps) for p in comps]
    psi = _apply_matrix(ell, phiphi, k)
    n = _proportionality_factor(psi, k, "ell o phi o phi", config)
    if not n.is_homogeneous(3):
        raise NotProportional("ell o phi o phi = n x with n not a cubic form")
    cert = InvolutionCertificate(tuple(map(tuple, ell)), n)
    if with_companion:
        cert = InvolutionCertificate(cert.ell, n, companion_cubic(phi, cert, config))
    return cert


def companion_cubic(phi: CremonaMap, cert: InvolutionCertificate,
                    config: RunConfig = DEFAULT) -> Poly:
    """``m`` with ``phi(ell(phi(y))) = m(y) y``; checks ``m(phi(x)) = n(x)^2`` symbolically."""
    k = phi.nvars
    comps = list(phi.components)
    inner = _apply_matrix(cert.ell, comps, k)
    chi = [p.compose(inner) for p in comps]
    m = _proportionality_factor(chi, k, "phi o ell o phi", config)
    if m.compose(comps) != cert.n_cubic * cert.n_cubic:
        raise NotProportional("m(phi(x)) != n(x)^2", operation="companion_cubic")
    return m


# -- bidegree / common factor --------------------------------------------------


def _random_line(rng, nvars, bound):
    while True:
        p = random_vector(rng, nvars, bound)
        q = random_vector(rng, nvars, bound)
        if mat_rank([p, q]) == 2:
            return p, q


def line_gcd_degree(polys, p, q) -> int:
    """Degree of the gcd of the binary forms ``f(s p + t q)``.

    The affine gcd in ``t`` misses common factors of ``s``; their multiplicity is
    the drop of the largest ``t``-degree below the form degree.
    """
    polys = [f for f in polys if not f.is_zero()]
    d = max(f.degree() for f in polys)
    rest = [line_restriction(f, p, q) for f in polys]
    live = [g for g in rest if not g.is_zero()]
    if not live:
        return d
    g = poly_gcd(live)
    return g.degree() + d - max(h.degree() for h in live)


def common_factor_degree(polys, config: RunConfig = DEFAULT, label="common-factor"):
    """Probable degree of a common factor, as the minimum gcd degree over seeded lines.

    A common factor of degree g gives a gcd of degree >= g on every line. A
    larger gcd on a line means the line meets the common zero locus, which has
    codimension >= 2 when there is no further factor; for lines drawn from
    ``[-B, B]`` this happens with probability O(1/B) per line, so with the
    defaults (B = 10, 5 independent lines) a spurious factor is reported with
    probability around 1e-5.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise InputError("all forms are zero")
    nvars = polys[0].nvars
    rng = config.rng(label)
    degs = []
    for _ in range(config.lines):
        p, q = _random_line(rng, nvars, config.sample_bound)
        degs.append(line_gcd_degree(polys, p, q))
    return min(degs)


def bidegree_certificate(phi, config: RunConfig = DEFAULT):
    """Degree, probable common factor and involution status of a quadratic map."""
    if not isinstance(phi, CremonaMap):
        phi = CremonaMap(phi)
    g = common_factor_degree(phi.components, config, "bidegree")
    report = {
        "degree": phi.map.degree,
        "common_factor_degree": g,
        "lines": config.lines,
        "scroll_case": g == 1,
    }
    if g == 0:
        try:
            verify_involution(phi, config=config, with_companion=False)
            report["involution"] = True
            report["type"] = "(2,2)"
        except NotProportional:
            report["involution"] = False
            report["type"] = "(2,?) candidate: not an involution for ell = id"
    elif g == 1:
        report["type"] = "linear up to a common linear factor"
    else:
        report["type"] = "degenerate: components share a quadratic factor"
    return report


# -- sampled base-locus consistency ----------------------------------------------


def base_locus_samples(phi: CremonaMap, cert: InvolutionCertificate,
                       config: RunConfig = DEFAULT, lines=None):
    """Rational base points ``v = phi(u)`` with ``n(u) = 0``.

    ``ell(phi(v)) = n(u) u = 0`` forces ``phi(v) = 0``; since ``m(v) = n(u)^2``
    the companion cubic vanishes there too, and for adjoint maps so does ``n``.
    Zeros ``u`` of ``n`` come from the coordinate points and from rational
    roots of ``n`` on seeded lines.
    """
    k = phi.nvars
    n, m = cert.n_cubic, cert.m_cubic
    zeros = [[1 if j == i else 0 for j in range(k)] for i in range(k)]
    rng = config.rng("base-locus")
    for _ in range(lines or config.lines):
        p, q = _random_line(rng, k, config.sample_bound)
        f = line_restriction(n, p, q)
        if f.is_zero():
            continue
        for t in rational_roots(f):
            zeros.append([a + t * b for a, b in zip(p, q)])
    out = []
    for u in zeros:
        if n.evaluate(u) != 0:
            continue
        v = phi(u)
        if all(a == 0 for a in v):
            continue
        rec = {
            "u": [fmt_scalar(a) for a in u],
            "v": [fmt_scalar(a) for a in v],
            "phi_v_zero": all(a == 0 for a in phi(v)),
            "n_v_zero": n.evaluate(v) == 0,
        }
        if m is not None:
            rec["m_v_zero"] = m.evaluate(v) == 0
        out.append(rec)
    return out
