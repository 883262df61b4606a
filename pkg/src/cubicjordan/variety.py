"""Cubic parametrizations of varieties 3-covered by twisted cubics, and the secant solver.

Chart convention: source variables ``(x0, x1, ..., x_{r+1})``; the image point is
``(x0^3 : x0^2 x : x0 phi(x) : n(x))``, which on ``x0 = 1`` is ``nu3(x)`` for the
adjoint map of a Jordan algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .config import DEFAULT, RunConfig, random_nonzero_vector, random_vector
from .core.linalg import rank as mat_rank
from .core.maps import RationalMap, proj_equal, restrict_to_line
from .core.poly import variables
from .core.scalar import QuadScalar, conj, fmt_scalar, normalize, to_scalar
from .cremona import (
    CremonaMap,
    InvolutionCertificate,
    adjoint_cremona,
    common_factor_degree,
    verify_involution,
)
from .cubic import (
    ZornPoint,
    curve_report,
    nu3,
    on_X,
    translation_T,
    twisted_cubic_through,
)
from .errors import DegenerateQ, InputError
from .jordan import JordanAlgebra, require_rank, vscale


@dataclass(frozen=True)
class VarietyParam:
    """``2r+4`` cubic forms in ``r+2`` variables."""

    r: int
    components: tuple
    source: str

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != 2 * self.r + 4:
            raise InputError(f"expected {2 * self.r + 4} components, got {len(comps)}")
        if any(p.nvars != self.r + 2 for p in comps):
            raise InputError(f"components must be forms in {self.r + 2} variables")
        if not all(p.is_zero() or p.is_homogeneous(3) for p in comps):
            raise InputError("components must be cubic forms")

    @property
    def map(self):
        return RationalMap(self.components)

    def __call__(self, point):
        return [p.evaluate(list(point)) for p in self.components]

    def chart(self, x):
        """Image of the affine point ``(1, x)``."""
        return self([1, *x])

    def to_json(self):
        return {
            "r": self.r,
            "source": self.source,
            "components": [p.format(names=[f"x{i}" for i in range(self.r + 2)], offset=0)
                           for p in self.components],
        }


def from_cremona(phi: CremonaMap, cert: InvolutionCertificate, source="from_cremona"):
    """``(x0^3, x0^2 x_1, ..., x0^2 x_{r+1}, x0 phi_0, ..., x0 phi_r, n)``."""
    k = phi.nvars
    r = k - 1
    x = variables(k + 1)
    x0 = x[0]
    lift = [p.insert_variable(0) for p in phi.components]
    comps = [x0 ** 3] + [x0 * x0 * xi for xi in x[1:]] + [x0 * f for f in lift]
    comps.append(cert.n_cubic.insert_variable(0))
    return VarietyParam(r, tuple(comps), source)


def jordan_variety(J: JordanAlgebra, config: RunConfig = DEFAULT) -> VarietyParam:
    phi = adjoint_cremona(J)
    cert = verify_involution(phi, config=config, with_companion=False)
    return from_cremona(phi, cert, source=f"from_cremona({J.name})")


def a3_explicit() -> VarietyParam:
    """``[t^3 : x t^2 : y t^2 : z t^2 : x^2 t : -x y t : (y^2 - x z) t : x^3]`` in variables (t, x, y, z)."""
    t, x, y, z = variables(4)
    comps = (t ** 3, x * t * t, y * t * t, z * t * t, x * x * t, -x * y * t,
             (y * y - x * z) * t, x ** 3)
    return VarietyParam(2, comps, "a3_explicit")


def scroll_param(kind: str, r: int) -> VarietyParam:
    """Homogenized ``(1, x_1..x_{r+1}, x_1^2, x_1 x_2, .., x_1 x_{r+1}, last)``.

    ``last`` is ``x_1^2 x_2`` for S122 and ``x_1^3`` for S113.
    """
    if kind not in ("S122", "S113"):
        raise InputError("scroll kind must be S122 or S113")
    if r < 1:
        raise InputError("r must be >= 1")
    x = variables(r + 2)
    x0, x1 = x[0], x[1]
    comps = [x0 ** 3] + [x0 * x0 * xi for xi in x[1:]] + [x0 * x1 * xi for xi in x[1:]]
    comps.append(x1 * x1 * x[2] if kind == "S122" else x1 ** 3)
    return VarietyParam(r, tuple(comps), {"S122": "scroll_122", "S113": "scroll_113"}[kind])


def extract_cremona(V: VarietyParam) -> CremonaMap:
    """``psi = (components r+2 .. 2r+2) / x0`` restricted to ``x0``-free forms."""
    r = V.r
    out = []
    for p in V.components[r + 2: 2 * r + 3]:
        try:
            out.append(p.divide_by_variable(0).drop_variable(0))
        except (ArithmeticError, ValueError):
            raise InputError("middle block is not of the form x0 * phi(x)") from None
    return CremonaMap(RationalMap(tuple(out)))


@dataclass(frozen=True)
class LineImage:
    tuple: tuple
    degree: int
    span_dim: int

    def to_json(self):
        return {
            "tuple": [p.format(names=["t"]) for p in self.tuple],
            "degree": self.degree,
            "span_dim": self.span_dim,
        }


def line_image(V: VarietyParam, p, q) -> LineImage:
    """Primitive restriction of ``V`` to the line ``p + t q``, its degree and linear span."""
    prim = restrict_to_line(V.components, p, q)
    nz = [c for c in prim if not c.is_zero()]
    deg = max(c.degree() for c in nz)
    mat = [[c.coefficient((i,)) for i in range(deg + 1)] for c in prim]
    return LineImage(tuple(prim), deg, mat_rank(mat))


def meets_base_locus(V: VarietyParam, p, q) -> bool:
    """Whether the line through ``p, q`` meets the base locus inside ``x0 = 0``.

    For parametrizations with first component ``x0^3`` the whole base locus lies
    in ``x0 = 0``, where the line has the single point ``p0 q - q0 p`` (or lies
    entirely, which also counts as special).
    """
    if p[0] == 0 and q[0] == 0:
        return True
    u = [p[0] * b - q[0] * a for a, b in zip(p, q)]
    return all(c == 0 for c in V(u))


def seeded_lines(V: VarietyParam, count, config: RunConfig = DEFAULT, label="lines",
                 general=True):
    """Seeded lines ``(p, q)``; with ``general`` those meeting the base locus are redrawn."""
    rng = config.rng(f"{label}:{V.source}")
    out = []
    while len(out) < count:
        p = random_vector(rng, V.r + 2, config.sample_bound)
        q = random_vector(rng, V.r + 2, config.sample_bound)
        if mat_rank([p, q]) < 2:
            continue
        if general and meets_base_locus(V, p, q):
            continue
        out.append((p, q))
    return out


def nondegeneracy_rank(V: VarietyParam, config: RunConfig = DEFAULT, count=None):
    """Rank of the image coordinates at ``3r+8`` seeded points (full rank is ``2r+4``)."""
    count = count or 3 * V.r + 8
    rng = config.rng(f"nondegeneracy:{V.source}")
    rows = [V(random_nonzero_vector(rng, V.r + 2, config.sample_bound)) for _ in range(count)]
    return mat_rank(rows)


def segre_relations_hold(point) -> bool:
    """The 2x2 minors of the three flattenings of a 2x2x2 tensor vanish.

    Coordinates are ordered as ``nu3`` of ``Q^3``: ``(000, 100, 010, 001, 011, 101, 110, 111)``.
    """
    labels = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0),
              (1, 1, 1)]
    z = dict(zip(labels, point))
    for axis in range(3):
        rest = [b for b in iproduct((0, 1), repeat=2)]

        def key(bit, pair):
            out = list(pair)
            out.insert(axis, bit)
            return tuple(out)

        for i, a in enumerate(rest):
            for b in rest[i + 1:]:
                if z[key(0, a)] * z[key(1, b)] != z[key(0, b)] * z[key(1, a)]:
                    return False
    return True


def three_point_curve_check(V: VarietyParam, J: JordanAlgebra, x, y, z,
                            params=(2, 3, -1, -2, 5, 7)):
    """The cubic through ``nu3(x), nu3(y), nu3(z)`` lies on the image of ``V``.

    Each sampled curve point with ``s != 0`` must equal ``V(1, u)`` with
    ``u = x/s`` read off the affine chart.
    """
    curve = twisted_cubic_through(J, x, y, z)
    rep = curve_report(curve, x, y, z)
    on_image = True
    for t in params:
        P = curve.at(t)
        if not P.s:
            continue
        u = [normalize(Fraction(c) / P.s) for c in P.x]
        if not proj_equal(P.coords(), V.chart(u)):
            on_image = False
    rep["on_image"] = on_image
    rep["ok"] = (rep["degree"] == 3 and rep["span_dim"] == 4 and all(
        rep[k] for k in ("primitive", "through_y", "through_z", "through_x_at_infinity",
                         "points_on_X", "on_image")))
    return rep


# -- secant through a general point -------------------------------------------------


@dataclass(frozen=True)
class SecantSolution:
    D: int
    lambda_mu: object
    lam: QuadScalar
    mu: QuadScalar
    p1: ZornPoint
    p2: ZornPoint
    line_check: bool
    on_X: bool
    conjugation_swaps: bool

    def to_json(self):
        return {
            "D": self.D,
            "lambda_mu": fmt_scalar(self.lambda_mu),
            "lambda": str(self.lam),
            "mu": str(self.mu),
            "p1": self.p1.to_json(),
            "p2": self.p2.to_json(),
            "line_check": self.line_check,
            "on_X": self.on_X,
            "conjugation_swaps": self.conjugation_swaps,
            "uniqueness": "derivation-forced",
        }


def _secant_points(J, qx, qprime, z, root, phi_q):
    """``p1, p2`` for a chosen square root of ``1 - 4 lambda mu``."""
    half = Fraction(1, 2)
    lam = (1 + root) * half
    mu = (1 - root) * half
    x1 = vscale((mu - lam) / (lam * z), phi_q)
    x2 = vscale((lam - mu) / (mu * z), phi_q)
    p1 = translation_T(J, qx, nu3(J, x1))
    p2 = translation_T(J, qx, nu3(J, x2))
    return lam, mu, p1, p2


def oadp_solve(J: JordanAlgebra, q, m=None) -> SecantSolution:
    """The secant line of ``X`` through ``q = [s, q_x; q', z]``.

    ``q`` is moved by ``T_(-q_x)`` to ``[1, 0; q', z]``; then
    ``lambda mu = m(q') / (z^2 + 4 m(q'))``, ``lambda + mu = 1`` and
    ``x_1 = ((mu - lambda)/(lambda z)) q'^#``, ``x_2 = ((lambda - mu)/(mu z)) q'^#``.
    ``m`` defaults to the generic norm (the companion cubic of the adjoint map).
    """
    require_rank(J, 3, "oadp_solve")
    if not isinstance(q, ZornPoint):
        q = ZornPoint.from_coords([to_scalar(c) for c in q], J.dim)
    if q.k != J.dim:
        raise InputError(f"q needs {2 * J.dim + 2} coordinates")
    if not q.s:
        raise DegenerateQ("s = 0: q is outside the chart s != 0")
    s = Fraction(q.s)
    q = ZornPoint(1, [normalize(c / s) for c in q.x], [normalize(c / s) for c in q.y],
                  normalize(q.t / s))
    qx = list(q.x)
    q0 = translation_T(J, vscale(-1, qx), q)
    qprime, z = list(q0.y), q0.t
    m_val = J.norm(qprime) if m is None else m.evaluate(qprime)
    witness = {"q_prime": [fmt_scalar(a) for a in qprime], "z": fmt_scalar(z)}
    if z == 0:
        raise DegenerateQ("z = 0 after the normalizing translation",
                          witness=witness)
    if m_val == 0:
        raise DegenerateQ("m(q') = 0", witness=witness)
    denom = z * z + 4 * m_val
    if denom == 0:
        raise DegenerateQ("z^2 + 4 m(q') = 0", witness=witness)
    lambda_mu = normalize(Fraction(m_val) / denom)
    disc = 1 - 4 * lambda_mu
    root = QuadScalar.sqrt_of(disc)
    D = root.D if root.b != 0 else 1
    phi_q = J.adjoint(qprime)
    lam, mu, p1, p2 = _secant_points(J, qx, qprime, z, root, phi_q)
    if lam + mu != 1 or lam * mu != lambda_mu:
        raise DegenerateQ("lambda + mu = 1 and lambda mu fail to hold", witness=witness)
    line_check = mat_rank([p1.coords(), p2.coords(), q.coords()]) == 2
    both_on_X = on_X(J, p1) and on_X(J, p2)
    _, _, r1, r2 = _secant_points(J, qx, qprime, z, -root, phi_q)
    swaps = r1.coords() == p2.coords() and r2.coords() == p1.coords()
    if D != 1:
        swaps = swaps and [conj(c) for c in p1.coords()] == p2.coords()
    return SecantSolution(D, lambda_mu, lam, mu, p1, p2, line_check, both_on_X, swaps)


def seeded_secant_queries(J: JordanAlgebra, count, config: RunConfig = DEFAULT):
    """``count`` seeded general points ``q`` (degenerate draws are skipped)."""
    rng = config.rng(f"oadp:{J.name}")
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > count * config.retry_limit:
            raise DegenerateQ("could not draw enough general points")
        coords = [1] + random_vector(rng, 2 * J.dim + 1, config.sample_bound)
        try:
            oadp_solve(J, coords)
        except DegenerateQ:
            continue
        out.append(coords)
    return out


def primitive_check(V: VarietyParam, config: RunConfig = DEFAULT):
    """Probable absence of a common factor among the components (seeded line gcds)."""
    return common_factor_degree(V.components, config, f"primitive:{V.source}") == 0
