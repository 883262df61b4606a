"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from .scalar import fmt_scalar, normalize, to_scalar

_SCALARS = (int, Fraction)


def _add_exp(e1, e2):
    return tuple([a + b for a, b in zip(e1, e2)])


class Poly:
    """Polynomial in ``nvars`` variables stored as ``{exponent tuple: coefficient}``.

    Instances are treated as immutable; zero coefficients are never stored.
    Coefficients are ints or reduced Fractions.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                c = to_scalar(c)
                if c != 0:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, value, nvars):
        value = to_scalar(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value != 0 else {})

    @classmethod
    def var(cls, i, nvars):
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls(len(exp), {tuple(exp): coef})

    # -- basic queries ------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return sorted(used)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, _SCALARS):
            return Poly.const(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = normalize(v + c)
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = to_scalar(c)
        if c == 0:
            return Poly.zero(self.nvars)
        if c == 1:
            return self
        return Poly._raw(self.nvars, {e: normalize(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw(self.nvars, {e: normalize(c) for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, Poly) and other.is_constant() and other.terms:
            return self / other.constant_value()
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, _SCALARS):
            other = to_scalar(other)
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- structural operations ----------------------------------------
    def evaluate(self, values):
        """Substitute ``values`` (any ring elements, incl. Polys) for the variables."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        powers = [{} for _ in range(self.nvars)]

        def pw(i, a):
            cache = powers[i]
            if a not in cache:
                cache[a] = values[i] if a == 1 else values[i] ** a
            return cache[a]

        symbolic = [v for v in values if isinstance(v, Poly)]
        if symbolic:
            nv = symbolic[0].nvars
            acc = {}
            for e, c in self.terms.items():
                term = None
                scalar = c
                for i, a in enumerate(e):
                    if a:
                        f = pw(i, a)
                        if isinstance(f, Poly):
                            term = f if term is None else term * f
                        else:
                            scalar = scalar * f
                if term is None:
                    term = Poly.const(scalar, nv)
                    scalar = 1
                _accumulate(acc, term, scalar)
            return Poly._raw(nv, {e: normalize(c) for e, c in acc.items() if c != 0})
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, a in enumerate(e):
                if a:
                    term = term * pw(i, a)
            total = total + term
        if isinstance(total, Fraction):
            total = normalize(total)
        return total

    __call__ = evaluate

    def compose(self, subs):
        """Symbolic substitution ``p(subs[0], ..., subs[n-1])``; subs share a variable count."""
        if len(subs) != self.nvars:
            raise ValueError(f"compose needs {self.nvars} substitutions, got {len(subs)}")
        nv = {s.nvars for s in subs if isinstance(s, Poly)}
        if len(nv) > 1:
            raise ValueError("substituted polynomials must share a variable count")
        target = nv.pop() if nv else 0
        subs = [s if isinstance(s, Poly) else Poly.const(s, target) for s in subs]
        result = self.evaluate(subs)
        if not isinstance(result, Poly):
            result = Poly.const(result, target)
        return result

    def divide_by_variable(self, i):
        """Exact division by ``x_i``; raises if some term is not divisible."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                raise ArithmeticError(f"x{i + 1} does not divide the polynomial")
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c
        return Poly._raw(self.nvars, out)

    def derivative(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly._raw(self.nvars, out)

    def drop_variable(self, i):
        """Remove variable ``i``, which must not occur."""
        if any(e[i] for e in self.terms):
            raise ValueError(f"variable x{i + 1} occurs in the polynomial")
        return Poly._raw(self.nvars - 1, {e[:i] + e[i + 1:]: c for e, c in self.terms.items()})

    def insert_variable(self, i):
        """Embed into ``nvars + 1`` variables with a fresh (unused) variable at index ``i``."""
        return Poly._raw(self.nvars + 1, {e[:i] + (0,) + e[i:]: c for e, c in self.terms.items()})

    # -- ordering / printing / json -------------------------------------
    def sorted_terms(self):
        """Terms in graded lexicographic order (highest first)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def format(self, names=None, offset=1):
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i + offset}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, a in enumerate(e):
                if a == 1:
                    factors.append(names[i])
                elif a > 1:
                    factors.append(f"{names[i]}^{a}")
            mono = "*".join(factors)
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = fmt_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{fmt_scalar(mag)}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.nvars}, {self.format()!r})"

    def to_json(self):
        return [{"exp": list(e), "coef": fmt_scalar(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, nvars=None):
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be a list of {exp, coef} objects")
        terms = {}
        for item in data:
            try:
                e = tuple(int(a) for a in item["exp"])
                c = to_scalar(item["coef"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"malformed polynomial term {item!r}") from exc
            if any(a < 0 for a in e):
                raise ValueError(f"negative exponent in {item!r}")
            terms[e] = normalize(terms.get(e, 0) + c)
        if nvars is None:
            if not terms:
                raise ValueError("cannot infer the variable count of an empty polynomial")
            nvars = len(next(iter(terms)))
        return cls(nvars, terms)


def _accumulate(acc, poly, coef=1):
    """``acc += coef * poly`` in place on a raw term dict."""
    get = acc.get
    for e, c in poly.terms.items():
        v = get(e)
        acc[e] = c * coef if v is None else v + c * coef


def poly_sum(polys, nvars):
    """Sum of many polynomials without quadratic re-copying."""
    acc = {}
    for p in polys:
        if isinstance(p, Poly):
            _accumulate(acc, p)
        elif p:
            _accumulate(acc, Poly.const(p, nvars))
    return Poly._raw(nvars, {e: normalize(c) for e, c in acc.items() if c != 0})


def variables(nvars):
    return [Poly.var(i, nvars) for i in range(nvars)]


def monomials(nvars, degree):
    """All exponent tuples of total degree ``degree`` in graded-lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def linear_form(coeffs):
    """The linear polynomial ``sum c_i x_i``."""
    n = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = c
    return Poly(n, terms)
