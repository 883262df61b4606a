"""Homogeneous rational maps, projective points and restriction to lines."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from .linalg import _div, rank
from .poly import Poly
from .univariate import exact_divide, poly_gcd


@dataclass(frozen=True)
class RationalMap:
    """Tuple of homogeneous forms of a common degree ``d >= 1``."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise InputError("a rational map needs at least one component")
        nv = {p.nvars for p in comps}
        if len(nv) != 1:
            raise InputError("components must share a variable count")
        if all(p.is_zero() for p in comps):
            raise InputError("all components are identically zero")
        degs = {p.degree() for p in comps if not p.is_zero()}
        if len(degs) != 1 or not all(p.is_homogeneous() for p in comps):
            raise InputError("components must be homogeneous of one common degree")
        if degs.pop() < 1:
            raise InputError("components must have degree >= 1")

    @property
    def source_vars(self) -> int:
        return self.components[0].nvars

    @property
    def degree(self) -> int:
        return max(p.degree() for p in self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __call__(self, point):
        return [p.evaluate(list(point)) for p in self.components]

    def compose(self, inner) -> "RationalMap":
        """``self o inner``."""
        inner = list(inner)
        return RationalMap(tuple(p.compose(inner) for p in self.components))

    def to_json(self):
        return [p.to_json() for p in self.components]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not data:
            raise InputError("map JSON must be a non-empty list of polynomials")
        polys = []
        nvars = None
        for comp in data:
            if comp:
                nvars = len(comp[0]["exp"])
                break
        for comp in data:
            try:
                polys.append(Poly.from_json(comp, nvars))
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        return cls(tuple(polys))


def normalize_projective(coords):
    """Divide by the first nonzero coordinate."""
    coords = list(coords)
    lead = next((c for c in coords if c != 0), None)
    if lead is None:
        raise InputError("the zero vector is not a projective point")
    return [c if lead == 1 else _div(c, lead) for c in coords]


def proj_equal(a, b) -> bool:
    """True iff ``a = lambda * b`` for a nonzero scalar (exact, via 2x2 minors)."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise InputError("projective points of different dimensions")
    if all(x == 0 for x in a) or all(x == 0 for x in b):
        raise InputError("the zero vector is not a projective point")
    i = next(j for j, x in enumerate(a) if x != 0)
    if b[i] == 0:
        return False
    ai, bi = a[i], b[i]
    return all(x * bi == y * ai for x, y in zip(a, b))


def line_restriction(poly: Poly, p, q) -> Poly:
    """``poly(p + t q)`` as a univariate polynomial in ``t``."""
    t = Poly.var(0, 1)
    subs = [Poly.const(pi, 1) + t * qi for pi, qi in zip(p, q)]
    return poly.compose(subs)


def primitive_tuple(polys):
    """Divide a tuple of univariate polynomials by their common (monic) gcd."""
    polys = list(polys)
    g = poly_gcd(polys)
    if g.is_zero() or g.degree() == 0:
        return polys, g
    return [exact_divide(p, g) for p in polys], g


def restrict_to_line(f, p, q):
    """Restrict every component of ``f`` to the line ``p + t q`` and take the primitive part."""
    p, q = list(p), list(q)
    nv = f[0].nvars if not isinstance(f, RationalMap) else f.source_vars
    if len(p) != nv or len(q) != nv:
        raise InputError(f"line points need {nv} coordinates")
    if rank([p, q]) < 2:
        raise InputError("p and q are proportional; they do not span a line")
    comps = [line_restriction(c, p, q) for c in f]
    prim, _ = primitive_tuple(comps)
    return prim
