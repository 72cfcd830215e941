"""Elliptic curves in long Weierstrass form over exact fields.

The group law is written once against the field operations, so the same code
runs over Q, quadratic fields and the function field Q(i)(l).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra.ratfunc import I, RatFunc
from .errors import VerificationError


def _zero(x) -> bool:
    return x == 0


@dataclass(frozen=True)
class WeierstrassCurve:
    """``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6``."""

    a1: object = 0
    a2: object = 0
    a3: object = 0
    a4: object = 0
    a6: object = 0

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def is_singular(self) -> bool:
        return _zero(self.discriminant())

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6
        return _zero(lhs - rhs)

    def point(self, x, y) -> ECPoint:
        P = ECPoint(x, y)
        if not self.contains(P):
            raise ValueError(f"({x}, {y}) is not on the curve")
        return P


@dataclass(frozen=True)
class ECPoint:
    x: object = None
    y: object = None

    @classmethod
    def infinity(cls) -> ECPoint:
        return cls()

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "oo" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint()


def curve_from_lambda_mu(lam, mu, check: bool = False) -> WeierstrassCurve:
    """``y^2 = (x - 1)(x - lam^2)(x - mu^2)`` in long form."""
    l2, m2 = lam * lam, mu * mu
    c = WeierstrassCurve(0, -1 - l2 - m2, 0, l2 + m2 + l2 * m2, -l2 * m2)
    if check and c.is_singular():
        raise ValueError("degenerate curve: two of 1, lam^2, mu^2 coincide")
    return c


def negate(P: ECPoint, C: WeierstrassCurve) -> ECPoint:
    if P.is_infinity:
        return P
    return ECPoint(P.x, -P.y - C.a1 * P.x - C.a3)


def _tangent_denominator(P: ECPoint, C: WeierstrassCurve):
    return 2 * P.y + C.a1 * P.x + C.a3


def double(P: ECPoint, C: WeierstrassCurve) -> ECPoint:
    if P.is_infinity:
        return P
    x, y = P.x, P.y
    den = _tangent_denominator(P, C)
    if _zero(den):
        return INFINITY
    alpha = (3 * x * x + 2 * C.a2 * x + C.a4 - C.a1 * y) / den
    beta = (-x * x * x + C.a4 * x + 2 * C.a6 - C.a3 * y) / den
    x3 = alpha * alpha + C.a1 * alpha - C.a2 - 2 * x
    y3 = -(alpha + C.a1) * x3 - beta - C.a3
    return ECPoint(x3, y3)


def add(P: ECPoint, Q: ECPoint, C: WeierstrassCurve) -> ECPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if _zero(P.x - Q.x):
        if _zero(P.y - Q.y):
            return double(P, C)
        return INFINITY
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    alpha = (y2 - y1) / (x2 - x1)
    nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = alpha * alpha + C.a1 * alpha - C.a2 - x1 - x2
    y3 = -(alpha + C.a1) * x3 - nu - C.a3
    return ECPoint(x3, y3)


def multiply(n: int, P: ECPoint, C: WeierstrassCurve) -> ECPoint:
    if n < 0:
        return multiply(-n, negate(P, C), C)
    out, base = INFINITY, P
    while n:
        if n & 1:
            out = add(out, base, C)
        base = double(base, C)
        n >>= 1
    return out


def torsion_order(P: ECPoint, C: WeierstrassCurve, bound: int = 12) -> int | None:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = add(Q, P, C)
    return None


def points_equal(P: ECPoint, Q: ECPoint) -> bool:
    if P.is_infinity or Q.is_infinity:
        return P.is_infinity and Q.is_infinity
    return _zero(P.x - Q.x) and _zero(P.y - Q.y)


# --- the 3-torsion family -----------------------------------------------

@dataclass(frozen=True)
class FamilyRecord:
    mu: RatFunc
    curve: WeierstrassCurve
    P1: ECPoint
    P2: ECPoint
    double_P1: ECPoint
    triple_P1: ECPoint
    sum_P1_P2: ECPoint
    checks: tuple[tuple[str, bool, object], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, object]]:
        return [(name, res) for name, ok, res in self.checks if not ok]


def family_record(mu: RatFunc | None = None) -> FamilyRecord:
    """Run the four checks for ``P1 = (0, i*l*mu)`` on the curve over Q(i)(l).

    ``mu`` defaults to ``l/(l + 1)``. Residuals are kept for every check.
    """
    lam = RatFunc.var()
    if mu is None:
        mu = lam / (lam + 1)
    C = curve_from_lambda_mu(lam, mu)
    y1 = I * lam * mu
    P1, P2 = C.point(RatFunc(0), y1), C.point(RatFunc(0), -y1)
    D = double(P1, C)
    T = multiply(3, P1, C)
    Sm = add(P1, P2, C)
    checks = []
    if D.is_infinity:
        checks.append(("x([2]P1) = 0", False, "oo"))
        checks.append(("y([2]P1) = -i*l*mu", False, "oo"))
    else:
        checks.append(("x([2]P1) = 0", _zero(D.x), D.x))
        res = D.y + y1
        checks.append(("y([2]P1) = -i*l*mu", _zero(res), res))
    checks.append(("[3]P1 = oo", T.is_infinity, T))
    checks.append(("P1 + P2 = oo", Sm.is_infinity, Sm))
    return FamilyRecord(mu, C, P1, P2, D, T, Sm, tuple(checks))


def verify_v4_family_relation(mu: RatFunc | None = None) -> FamilyRecord:
    """Raise :class:`VerificationError` on the first failed check."""
    rec = family_record(mu)
    for name, ok, residual in rec.checks:
        if not ok:
            raise VerificationError(f"identity {name} fails: residual {residual}", residual)
    return rec


def spot_check(lam: Fraction, mu: Fraction) -> tuple[WeierstrassCurve, ECPoint, ECPoint]:
    """Curve, ``P1`` and ``[2]P1`` at a rational parameter point, over Q(i)."""
    from .algebra.quadratic import QuadElt

    C = curve_from_lambda_mu(QuadElt.coerce(lam), QuadElt.coerce(mu))
    P1 = C.point(QuadElt.coerce(0), I * lam * mu)
    return C, P1, double(P1, C)
