"""Rational scalars and elements of quadratic fields Q(sqrt(D))."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def to_scalar(value):
    """Coerce ``value`` to a canonical rational.

    Integral values come back as ``int`` (cheaper arithmetic), everything
    else as a reduced ``Fraction``. Accepts ints, Fractions and strings
    like ``"-3/2"``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value.strip().replace("−", "-"))
    elif isinstance(value, Rational):
        value = Fraction(value.numerator, value.denominator)
    else:
        raise TypeError(f"cannot interpret {value!r} as an exact rational")
    if value.denominator == 1:
        return value.numerator
    return value


def normalize(value):
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator
    return value


def fmt_scalar(value) -> str:
    """Render a rational as ``"p/q"`` (``q`` omitted when 1)."""
    value = to_scalar(value)
    return str(value)


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return ``(c, d)`` with ``n == c*c*d`` and ``d`` squarefree (sign kept in d)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    c = 1
    d = 1
    p = 2
    # trial division up to the cube root; the cofactor then has at most two prime factors
    while p * p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            c *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1 if p == 2 else 2
    s = math.isqrt(n)
    if s * s == n:
        c *= s
    else:
        d *= n
    return c, sign * d


def squarefree_part(n: int) -> int:
    return squarefree_decomposition(n)[1]


@dataclass(frozen=True)
class QuadScalar:
    """The number ``a + b*sqrt(D)`` with rational ``a, b`` and squarefree ``D``."""

    a: object
    b: object
    D: int

    def __post_init__(self):
        object.__setattr__(self, "a", to_scalar(self.a))
        object.__setattr__(self, "b", to_scalar(self.b))
        if self.b != 0:
            if self.D in (0, 1) or squarefree_part(self.D) != self.D:
                raise ValueError(f"D={self.D} must be squarefree and not a square")

    @classmethod
    def sqrt_of(cls, q) -> "QuadScalar":
        """An exact square root of the rational ``q`` in its quadratic field."""
        q = Fraction(q)
        if q == 0:
            return cls(0, 0, 1)
        c, d = squarefree_decomposition(q.numerator * q.denominator)
        coef = Fraction(c, q.denominator)
        if d == 1:
            return cls(coef, 0, 1)
        return cls(0, coef, d)

    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.b == 0:
                return other.a, 0
            if self.b != 0 and other.D != self.D:
                raise ValueError("mixing different quadratic fields")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return other, 0
        return NotImplemented

    def _field(self, other):
        if self.b == 0 and isinstance(other, QuadScalar):
            return other.D
        return self.D

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return QuadScalar(self.a + c[0], self.b + c[1], self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.D)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return QuadScalar(self.a - c[0], self.b - c[1], self._field(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        D = self._field(other)
        a, b = self.a, self.b
        return QuadScalar(a * c[0] + D * b * c[1], a * c[1] + b * c[0], D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.a, -self.b, self.D)

    def field_norm(self):
        """``(a + b sqrt D)(a - b sqrt D) = a^2 - D b^2`` as a rational."""
        return to_scalar(self.a * self.a - self.D * self.b * self.b)

    def inverse(self) -> "QuadScalar":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt D)")
        return QuadScalar(Fraction(self.a) / n, -Fraction(self.b) / n, self.D)

    def __truediv__(self, other):
        if isinstance(other, QuadScalar):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt D)")
            return QuadScalar(Fraction(self.a) / other, Fraction(self.b) / other, self.D)
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadScalar(1, 0, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.a == c[0] and self.b == c[1]

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return fmt_scalar(self.a)
        sign = "-" if self.b < 0 else "+"
        b = fmt_scalar(abs(self.b))
        root = f"sqrt({self.D})" if b == "1" else f"{b}*sqrt({self.D})"
        if self.a == 0:
            return root if sign == "+" else "-" + root
        return f"{fmt_scalar(self.a)}{sign}{root}"

    def to_json(self):
        return {"a": fmt_scalar(self.a), "b": fmt_scalar(self.b), "D": self.D}


def conj(value):
    """Galois conjugate; rationals are fixed."""
    if isinstance(value, QuadScalar):
        return value.conjugate()
    return value
