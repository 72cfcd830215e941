"""Univariate rational functions over Q(i) (or any exact coefficient field)."""

from __future__ import annotations

from fractions import Fraction

from .poly import PolyMV, make_monic, poly_divmod, poly_gcd
from .quadratic import QuadElt

I = QuadElt(0, 1, -1)


class RatFunc:
    """Reduced quotient ``num/den`` of univariate polynomials, ``den`` monic."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=None, _reduced: bool = False) -> None:
        num = _as_poly(num)
        den = _as_poly(1 if den is None else den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = PolyMV.constant(Fraction(1), 1)
            else:
                g = poly_gcd(num, den)
                if g.degree() > 0:
                    num = poly_divmod(num, g)[0]
                    den = poly_divmod(den, g)[0]
                _, lead = den.leading()
                inv = 1 / lead
                num, den = num * inv, den * inv
        self._num = num
        self._den = den

    @classmethod
    def var(cls) -> RatFunc:
        return cls(PolyMV.var(0, 1))

    @property
    def num(self) -> PolyMV:
        return self._num

    @property
    def den(self) -> PolyMV:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, PolyMV):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, QuadElt)):
            return RatFunc(PolyMV.constant(other, 1))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self._num, self._den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return (1 / self) ** (-n)
        out = RatFunc(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        den = self._den(x)
        if den == 0:
            raise ZeroDivisionError("pole of the rational function")
        return self._num(x) / den

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self._den.degree() == 0:
            return self._num.to_string(("l",))
        return f"({self._num.to_string(('l',))})/({self._den.to_string(('l',))})"


def _as_poly(x) -> PolyMV:
    if isinstance(x, PolyMV):
        if x.arity != 1:
            raise ValueError("RatFunc needs univariate polynomials")
        return x
    return PolyMV.constant(x, 1)


__all__ = ["RatFunc", "I", "make_monic"]
