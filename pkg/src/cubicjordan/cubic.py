"""The twisted cubic over a rank-3 Jordan algebra and its Zorn-matrix automorphisms.

Points of ``P(Z2(J)) = P^(2k+1)`` are written ``[s, x; y, t]`` with scalar
corners ``s, t`` and ``x, y`` in ``J``. The cubic curve is the closure of
``nu3(x) = [1, x; x^#, N(x)]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT, RunConfig, random_vector
from .core.linalg import in_span, mat_vec
from .core.linalg import rank as mat_rank
from .core.maps import primitive_tuple, proj_equal
from .core.poly import Poly
from .core.scalar import fmt_scalar, normalize, to_scalar
from .errors import GenericityFailure, InputError, NotInvertible, StructuralCheckFailed
from .jordan import JordanAlgebra, require_rank, vadd, vscale, vsub, vzero


def _str(v):
    return str(v) if not isinstance(v, (int, Fraction)) else fmt_scalar(v)


@dataclass(frozen=True)
class ZornPoint:
    """Homogeneous coordinates ``[s, x; y, t]``; entries may be rationals, polys or quad scalars."""

    s: object
    x: tuple
    y: tuple
    t: object

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        if len(self.x) != len(self.y):
            raise InputError("x and y must have the same length")

    @property
    def k(self):
        return len(self.x)

    def coords(self):
        return [self.s, *self.x, *self.y, self.t]

    @classmethod
    def from_coords(cls, coords, k=None):
        coords = list(coords)
        if k is None:
            if len(coords) % 2:
                raise InputError("a Zorn point has an even number of coordinates")
            k = (len(coords) - 2) // 2
        if len(coords) != 2 * k + 2:
            raise InputError(f"a Zorn point over a {k}-dimensional algebra has {2 * k + 2} "
                             f"coordinates, got {len(coords)}")
        return cls(coords[0], coords[1:k + 1], coords[k + 1:2 * k + 1], coords[-1])

    def proj_equal(self, other) -> bool:
        return proj_equal(self.coords(), other.coords())

    def is_zero(self):
        return vzero(self.coords())

    def to_json(self):
        return [_str(c) for c in self.coords()]


def parse_point(values, k):
    """A Zorn point from a list of ``2k+2`` scalar strings/numbers."""
    try:
        coords = [to_scalar(v) for v in values]
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad point coordinate: {exc}") from exc
    p = ZornPoint.from_coords(coords, k)
    if p.is_zero():
        raise InputError("the zero vector is not a projective point")
    return p


def nu3(J: JordanAlgebra, x) -> ZornPoint:
    """``[1, x; x^#, N(x)]``."""
    require_rank(J, 3, "nu3")
    if len(x) != J.dim:
        raise InputError(f"expected {J.dim} coordinates, got {len(x)}")
    n, adj = J.norm_and_adjoint(list(x))
    return ZornPoint(1, x, adj, n)


def zero_point(J):
    return ZornPoint(1, [0] * J.dim, [0] * J.dim, 0)


def infinity_point(J):
    return ZornPoint(0, [0] * J.dim, [0] * J.dim, 1)


def inversion_I(M: ZornPoint) -> ZornPoint:
    """``[s, x; y, t] -> [t, y; x, s]``."""
    return ZornPoint(M.t, M.y, M.x, M.s)


def translation_T(J: JordanAlgebra, omega, M: ZornPoint) -> ZornPoint:
    """``[s, x + s w; y + w # x + s w^#, t + T(y w) + T(x w^#) + s N(w)]``."""
    require_rank(J, 3, "translation_T")
    omega = list(omega)
    if len(omega) != J.dim or M.k != J.dim:
        raise InputError(f"expected vectors of length {J.dim}")
    s, x, y, t = M.s, list(M.x), list(M.y), M.t
    n_w, w_sharp = J.norm_and_adjoint(omega)
    new_x = vadd(x, vscale(s, omega))
    new_y = vadd(vadd(y, J.sharp_bilinear(omega, x)), vscale(s, w_sharp))
    new_t = t + J.trace_form(y, omega) + J.trace_form(x, w_sharp) + s * n_w
    return ZornPoint(s, new_x, new_y, new_t)


def on_X(J: JordanAlgebra, M: ZornPoint) -> bool:
    """Exact membership in the closure of ``nu3(J)``.

    In the chart ``s != 0`` the equations are ``s y = x^#`` and ``s^2 t = N(x)``.
    ``I`` and every ``T_w`` preserve the variety, so a point with ``s = 0`` is
    moved into that chart by ``I`` or ``I o T_w`` first.
    """
    if M.is_zero():
        raise InputError("the zero vector is not a projective point")
    if M.s:
        n, adj = J.norm_and_adjoint(list(M.x))
        return vzero(vsub(vscale(M.s, M.y), adj)) and M.s * M.s * M.t == n
    if M.t:
        return on_X(J, inversion_I(M))
    k = J.dim
    shifts = [J.unit] + [[1 if j == i else 0 for j in range(k)] for i in range(k)]
    rng = J.config.rng("on_X")
    shifts += [random_vector(rng, k, J.config.sample_bound) for _ in range(8)]
    for w in shifts:
        P = translation_T(J, w, M)
        if P.t:
            return on_X(J, inversion_I(P))
    # no tried shift reached the chart; not certified
    return False


# -- structural transformations -------------------------------------------------


@dataclass(frozen=True)
class StructuralPair:
    """A linear map ``g`` together with ``g^#`` and ``eta`` satisfying the structural identities."""

    g: tuple
    g_sharp: tuple
    eta: object
    checked_samples: int


def check_structural(J: JordanAlgebra, g, g_sharp, eta, config: RunConfig | None = None,
                     samples=None) -> StructuralPair:
    """Check ``N(g x) = eta N(x)`` and ``(g x)^# = eta g^#(x^#)`` exactly at seeded samples.

    The second identity is equivalent to ``g(x)^(-1) = g^#(x^(-1))`` for invertible
    ``x``; checking it without projective rescaling pins down the scale of ``g^#``.
    """
    config = config or J.config
    samples = samples or config.samples
    require_rank(J, 3, "structural_G")
    k = J.dim
    g = [[to_scalar(c) for c in row] for row in g]
    g_sharp = [[to_scalar(c) for c in row] for row in g_sharp]
    eta = to_scalar(eta)
    if any(len(row) != k for row in g) or len(g) != k \
            or any(len(row) != k for row in g_sharp) or len(g_sharp) != k:
        raise InputError(f"g and g_sharp must be {k}x{k} matrices")
    if eta == 0:
        raise InputError("eta must be nonzero")
    rng = config.rng(f"structural:{J.name}")
    for _ in range(samples):
        x = random_vector(rng, k, config.sample_bound)
        gx = mat_vec(g, x)
        n_x, adj_x = J.norm_and_adjoint(x)
        n_gx, adj_gx = J.norm_and_adjoint(gx)
        witness = {"x": [_str(a) for a in x]}
        if n_gx != eta * n_x:
            raise StructuralCheckFailed("N(g x) != eta N(x)", witness=witness)
        if adj_gx != [normalize(eta * a) for a in mat_vec(g_sharp, adj_x)]:
            raise StructuralCheckFailed("(g x)^# != eta g^#(x^#)", witness=witness)
    return StructuralPair(tuple(map(tuple, g)), tuple(map(tuple, g_sharp)), eta, samples)


def structural_G(J: JordanAlgebra, pair: StructuralPair, M: ZornPoint) -> ZornPoint:
    """``[s, g(x); eta g^#(y), eta t]`` for a checked structural pair."""
    gx = mat_vec(pair.g, list(M.x))
    gy = vscale(pair.eta, mat_vec(pair.g_sharp, list(M.y)))
    return ZornPoint(M.s, gx, gy, pair.eta * M.t)


# -- twisted cubics through three points ----------------------------------------


@dataclass(frozen=True)
class CurveParam:
    """``t -> nu3(x + (a + t b)^(-1))`` with denominators cleared.

    ``base = x``, ``a = (y - x)^(-1)``, ``b = (z - x)^(-1) - (y - x)^(-1)``;
    components are univariate polynomials in ``t`` of degree at most 3.
    """

    components: tuple
    algebra: JordanAlgebra
    base: tuple
    a: tuple
    b: tuple

    @property
    def degree(self):
        return max(p.degree() for p in self.components if not p.is_zero())

    def at(self, t) -> ZornPoint:
        return ZornPoint.from_coords([p.evaluate([t]) for p in self.components], self.algebra.dim)

    def leading_point(self) -> ZornPoint:
        d = self.degree
        return ZornPoint.from_coords([p.coefficient((d,)) for p in self.components],
                                     self.algebra.dim)

    def coefficient_matrix(self):
        d = self.degree
        return [[p.coefficient((i,)) for i in range(d + 1)] for p in self.components]

    def span_dim(self, params=(0, 1, 2, 3, -1, -2)):
        """Dimension of the span of the curve points at the given parameters."""
        return mat_rank([self.at(t).coords() for t in params])

    def contains(self, M: ZornPoint) -> bool:
        """Exact membership test for points of the curve, including those with ``s = 0``.

        ``T_(-x)`` maps the curve to ``[N(w), w^#; w, 1]``, so a point lies on it
        iff its pull-back ``Q`` has ``Q.t != 0``, ``w = Q.y / Q.t`` is on the line
        ``a + t b`` and ``Q`` is proportional to ``I(nu3(w))`` (or ``M`` is the point at infinity).
        """
        if M.proj_equal(self.leading_point()):
            return True
        J = self.algebra
        Q = translation_T(J, vscale(-1, list(self.base)), M)
        if not Q.t:
            return False
        w = [_div(c, Q.t) for c in Q.y]
        if mat_rank([list(self.b), vsub(w, list(self.a))]) > 1:
            return False
        return Q.proj_equal(inversion_I(nu3(J, w)))

    def is_primitive(self):
        _, g = primitive_tuple(self.components)
        return g.is_zero() or g.degree() == 0

    def to_json(self):
        return {
            "components": [p.format(names=["t"]) for p in self.components],
            "degree": self.degree,
        }


def _div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return normalize(Fraction(a) / b)
    return a / b


def twisted_cubic_through(J: JordanAlgebra, x, y, z) -> CurveParam:
    """The cubic curve on ``X`` through ``nu3(y)`` (t=0), ``nu3(z)`` (t=1) and ``nu3(x)`` (t=oo).

    With ``y1 = y - x``, ``z1 = z - x``, ``z2 = z1^(-1) - y1^(-1)`` and
    ``w(t) = y1^(-1) + t z2``, the curve is ``T_x(I(nu3(w(t)))) = T_x([N(w), w^#; w, 1])``,
    which is ``nu3(x + w(t)^(-1))`` with the denominator ``N(w(t))`` cleared.
    """
    require_rank(J, 3, "twisted_cubic_through")
    x, y, z = ([to_scalar(c) for c in v] for v in (x, y, z))
    if not (len(x) == len(y) == len(z) == J.dim):
        raise InputError(f"points need {J.dim} coordinates")

    def inv(v, label):
        try:
            return J.invert(v)
        except NotInvertible:
            raise GenericityFailure(f"{label} is not invertible",
                                    witness={label: [_str(c) for c in v]}) from None

    y1 = vsub(y, x)
    z1 = vsub(z, x)
    a = inv(y1, "y1")
    z2 = vsub(inv(z1, "z1"), a)
    inv(z2, "z2")
    t = Poly.var(0, 1)
    w = [Poly.const(ai, 1) + t * bi for ai, bi in zip(a, z2)]
    n_w, w_sharp = J.norm_and_adjoint(w)
    M = ZornPoint(n_w, w_sharp, w, Poly.const(1, 1))
    image = translation_T(J, x, M)
    comps = [c if isinstance(c, Poly) else Poly.const(c, 1) for c in image.coords()]
    prim, _ = primitive_tuple(comps)
    return CurveParam(tuple(prim), J, tuple(x), tuple(a), tuple(z2))


def curve_report(curve: CurveParam, x, y, z, samples=(2, 3, -1, -2, 5, 7)):
    """Checks on a curve produced by :func:`twisted_cubic_through`."""
    J = curve.algebra
    pts = [curve.at(s) for s in samples]
    return {
        "degree": curve.degree,
        "primitive": curve.is_primitive(),
        "span_dim": curve.span_dim(),
        "through_y": curve.at(0).proj_equal(nu3(J, y)),
        "through_z": curve.at(1).proj_equal(nu3(J, z)),
        "through_x_at_infinity": curve.leading_point().proj_equal(nu3(J, x)),
        "points_on_X": all(on_X(J, p) for p in pts if not p.is_zero()),
    }


def same_curve(c1: CurveParam, c2: CurveParam, samples=(2, 3, -1, -2, 5, 7)) -> bool:
    """Sampled points of ``c1`` lie in the span of ``c2`` and on its image."""
    span = [c2.at(s).coords() for s in (0, 1, 2, 3, -1, -2)]
    for s in samples:
        p = c1.at(s)
        if p.is_zero():
            continue
        if not in_span(span, p.coords()) or not c2.contains(p):
            return False
    return True
