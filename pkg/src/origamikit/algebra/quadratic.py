"""Elements of quadratic fields Q(sqrt(D))."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC


def squarefree_part(n: int) -> tuple[int, int]:
    """Split a nonzero integer as ``n = s**2 * D`` with ``D`` squarefree.

    Returns ``(s, D)`` with ``s > 0``; the sign of ``n`` is carried by ``D``.
    """
    if n == 0:
        raise ValueError("squarefree_part of 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, core = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            core *= p
        p += 1 if p == 2 else 2
    core *= n
    return s, sign * core


def _is_squarefree(D: int) -> bool:
    return D != 0 and squarefree_part(D)[0] == 1


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"not a rational number: {x!r}")


class IncompatibleFields(ValueError):
    """Raised when combining elements of Q(sqrt(D1)) and Q(sqrt(D2)), D1 != D2."""


class QuadElt:
    """The number ``a + b*sqrt(D)`` with rational ``a``, ``b``.

    ``D`` must be squarefree and different from 0 and 1. A rational element
    (``b == 0``) may carry ``D=None``; it compares equal to the same rational
    in any field and combines with elements of any field.

    >>> phi = QuadElt(Fraction(1, 2), Fraction(1, 2), 5)
    >>> phi * phi
    QuadElt(3/2, 1/2, 5)
    """

    __slots__ = ("_a", "_b", "_D")

    def __init__(self, a=0, b=0, D: int | None = None) -> None:
        a = _as_fraction(a)
        b = _as_fraction(b)
        if D is not None:
            D = int(D)
            if D == 1 or not _is_squarefree(D):
                raise ValueError(f"D must be squarefree and != 0, 1; got {D}")
        elif b != 0:
            raise ValueError("an irrational element needs a discriminant tag D")
        self._a = a
        self._b = b
        self._D = D

    # construction helpers
    @classmethod
    def sqrt(cls, D: int) -> QuadElt:
        """``sqrt(D)`` for a squarefree ``D``."""
        return cls(0, 1, D)

    @classmethod
    def coerce(cls, x) -> QuadElt:
        if isinstance(x, QuadElt):
            return x
        return cls(_as_fraction(x), 0, None)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def D(self) -> int | None:
        return self._D

    def is_rational(self) -> bool:
        return self._b == 0

    def _field(self, other: QuadElt) -> int | None:
        if self._b == 0:
            return other._D if other._b != 0 else (self._D if self._D == other._D else None)
        if other._b == 0 or other._D == self._D:
            return self._D
        raise IncompatibleFields(f"cannot combine Q(sqrt({self._D})) and Q(sqrt({other._D}))")

    # arithmetic
    def __add__(self, other):
        try:
            other = QuadElt.coerce(other)
        except TypeError:
            return NotImplemented
        D = self._field(other)
        return QuadElt(self._a + other._a, self._b + other._b, D)

    __radd__ = __add__

    def __neg__(self) -> QuadElt:
        return QuadElt(-self._a, -self._b, self._D)

    def __pos__(self) -> QuadElt:
        return self

    def __sub__(self, other):
        try:
            other = QuadElt.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadElt.coerce(other)
        except TypeError:
            return NotImplemented
        D = self._field(other)
        Dv = D if D is not None else 0
        a = self._a * other._a + Dv * self._b * other._b
        b = self._a * other._b + self._b * other._a
        return QuadElt(a, b, D)

    __rmul__ = __mul__

    def conjugate(self) -> QuadElt:
        """Galois conjugate ``a - b*sqrt(D)``."""
        return QuadElt(self._a, -self._b, self._D)

    def norm(self) -> Fraction:
        Dv = self._D if self._D is not None else 0
        return self._a * self._a - Dv * self._b * self._b

    def inverse(self) -> QuadElt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return QuadElt(c._a / n, c._b / n, self._D)

    def __truediv__(self, other):
        try:
            other = QuadElt.coerce(other)
        except TypeError:
            return NotImplemented
        self._field(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadElt.coerce(other) / self

    def __pow__(self, n: int) -> QuadElt:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElt(1, 0, self._D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElt):
            if self._b == 0 and other._b == 0:
                return self._a == other._a
            return self._D == other._D and self._a == other._a and self._b == other._b
        try:
            other = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self._b == 0 and self._a == other

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._D))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __complex__(self) -> complex:
        if self._b == 0:
            return complex(float(self._a))
        root = complex(self._D) ** 0.5
        return float(self._a) + float(self._b) * root

    def __repr__(self) -> str:
        if self._D is None:
            return f"QuadElt({self._a})"
        return f"QuadElt({self._a}, {self._b}, {self._D})"

    def __str__(self) -> str:
        from .scalars import format_scalar

        return format_scalar(self)
