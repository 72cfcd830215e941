"""Sparse multivariate (Laurent) polynomials with exact coefficients.

Coefficients are any exact field elements that support ``+ - * /`` and
``== 0``: :class:`fractions.Fraction` or :class:`QuadElt`. Exponents may be
negative; :func:`normalize_locus` turns such a Laurent polynomial into the
canonical polynomial equation of the same zero set on the torus.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .quadratic import QuadElt, squarefree_part

Monomial = tuple[int, ...]

DEFAULT_NAMES = ("l", "m")


class PolyMV:
    """Immutable sparse polynomial ``{exponent vector: coefficient}``."""

    __slots__ = ("_terms", "_arity", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), arity: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, object] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if arity is None:
                arity = len(mono)
            elif len(mono) != arity:
                raise ValueError(f"exponent vector {mono} does not have arity {arity}")
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            c = clean.get(mono, 0) + coeff
            if c == 0:
                clean.pop(mono, None)
            else:
                clean[mono] = c
        if arity is None:
            raise ValueError("arity of an empty polynomial must be given")
        self._terms = clean
        self._arity = arity
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, arity: int) -> PolyMV:
        return cls({}, arity)

    @classmethod
    def constant(cls, c, arity: int) -> PolyMV:
        return cls({(0,) * arity: c}, arity)

    @classmethod
    def var(cls, index: int, arity: int) -> PolyMV:
        mono = tuple(1 if k == index else 0 for k in range(arity))
        return cls({mono: Fraction(1)}, arity)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> PolyMV:
        """Univariate polynomial from ascending coefficients."""
        return cls({(k,): c for k, c in enumerate(coeffs)}, 1)

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        return all(e >= 0 for mono in self._terms for e in mono)

    def degree(self, index: int | None = None) -> int:
        """Total degree, or the degree in one variable; ``-1`` for zero."""
        if not self._terms:
            return -1
        if index is None:
            return max(sum(m) for m in self._terms)
        return max(m[index] for m in self._terms)

    def leading(self) -> tuple[Monomial, object]:
        """Lexicographically greatest monomial and its coefficient."""
        mono = max(self._terms)
        return mono, self._terms[mono]

    def _check(self, other: PolyMV) -> None:
        if other._arity != self._arity:
            raise ValueError(f"arity mismatch: {self._arity} vs {other._arity}")

    def _lift(self, other) -> PolyMV:
        if isinstance(other, PolyMV):
            self._check(other)
            return other
        return PolyMV.constant(other, self._arity)

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        return PolyMV(list(self._terms.items()) + list(other._terms.items()), self._arity)

    __radd__ = __add__

    def __neg__(self) -> PolyMV:
        return PolyMV({m: -c for m, c in self._terms.items()}, self._arity)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, PolyMV):
            if other == 0:
                return PolyMV.zero(self._arity)
            return PolyMV({m: c * other for m, c in self._terms.items()}, self._arity)
        self._check(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return PolyMV(out, self._arity)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PolyMV:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (mono, c), = self._terms.items()
            if isinstance(c, int):
                c = Fraction(c)
            return PolyMV({tuple(n * e for e in mono): c ** n}, self._arity)
        result = PolyMV.constant(Fraction(1), self._arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, mono: Monomial) -> PolyMV:
        """Multiply by the monomial with exponent vector ``mono``."""
        return PolyMV({tuple(a + b for a, b in zip(m, mono)): c for m, c in self._terms.items()}, self._arity)

    def __call__(self, *point):
        return poly_eval(self, point)

    def substitute_monomial_map(self, signs: Sequence[int], matrix: Sequence[Sequence[int]]) -> PolyMV:
        """Compose with ``x_i -> signs[i] * prod_j x_j**matrix[i][j]``."""
        n = self._arity
        out: dict[Monomial, object] = {}
        for mono, c in self._terms.items():
            sign = 1
            new = [0] * n
            for i, e in enumerate(mono):
                if e % 2 and signs[i] < 0:
                    sign = -sign
                for j in range(n):
                    new[j] += e * matrix[i][j]
            key = tuple(new)
            out[key] = out.get(key, 0) + sign * c
        return PolyMV(out, n)

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, PolyMV):
            return self._arity == other._arity and self._terms == other._terms
        if other == 0:
            return not self._terms
        return self == PolyMV.constant(other, self._arity)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._arity, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"PolyMV({self.to_string()!r})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = DEFAULT_NAMES if self._arity <= 2 else tuple(f"x{k}" for k in range(self._arity))
            if self._arity == 1:
                names = ("l",)
        if not self._terms:
            return "0"
        from .scalars import format_scalar

        pieces = []
        for mono in sorted(self._terms, reverse=True):
            c = self._terms[mono]
            if isinstance(c, QuadElt) and c.is_rational():
                c = c.a
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            neg = isinstance(c, (int, Fraction)) and c < 0
            mag = -c if neg else c
            cs = format_scalar(mag)
            if isinstance(mag, QuadElt):
                cs = f"({cs})"
            if factors:
                body = "*".join(factors) if mag == 1 else cs + "*" + "*".join(factors)
            else:
                body = cs
            pieces.append(("-" if neg else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(p: PolyMV, point: Sequence):
    """Evaluate exactly at ``point`` (negative exponents invert)."""
    if len(point) != p.arity:
        raise ValueError(f"arity mismatch: polynomial has {p.arity} variables, point has {len(point)}")
    total = 0
    for mono, c in p.items():
        term = c
        for x, e in zip(point, mono):
            if e:
                term = term * _power(x, e)
        total = total + term
    return total


def _power(x, e: int):
    if e >= 0:
        return x ** e
    return (1 / x if not isinstance(x, int) else Fraction(1, x)) ** (-e)


def _all_rational(p: PolyMV) -> bool:
    return all(isinstance(c, (int, Fraction)) or (isinstance(c, QuadElt) and c.is_rational()) for _, c in p.items())


def _rational(c) -> Fraction:
    return c.a if isinstance(c, QuadElt) else Fraction(c)


def normalize_locus(p: PolyMV) -> PolyMV:
    """Canonical representative of the zero locus of ``p`` on the torus.

    Removes the largest monomial factor (so negative exponents are cleared
    and every variable has minimum exponent 0). Rational polynomials are then
    scaled to coprime integer coefficients with the lexicographically greatest
    monomial positive; other coefficient fields are made monic.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial does not define a locus")
    mins = [min(m[k] for m, _ in p.items()) for k in range(p.arity)]
    q = p.shift(tuple(-e for e in mins))
    _, lead = q.leading()
    if _all_rational(q):
        coeffs = {m: _rational(c) for m, c in q.items()}
        den = 1
        for c in coeffs.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {m: int(c * den) for m, c in coeffs.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if _rational(lead) < 0:
            g = -g
        return PolyMV({m: Fraction(v, g) for m, v in ints.items()}, p.arity)
    return q * (1 / lead)


# --- univariate helpers -------------------------------------------------

def coeffs_of(p: PolyMV) -> list:
    """Ascending coefficient list of a univariate polynomial."""
    if p.arity != 1:
        raise ValueError("expected a univariate polynomial")
    if not p.is_polynomial():
        raise ValueError("expected nonnegative exponents")
    deg = p.degree()
    out = [Fraction(0)] * (deg + 1)
    for (k,), c in p.items():
        out[k] = c
    return out


def poly_divmod(p: PolyMV, q: PolyMV) -> tuple[PolyMV, PolyMV]:
    """Euclidean division of univariate polynomials."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = coeffs_of(p) if not p.is_zero() else []
    den = coeffs_of(q)
    dq = len(den) - 1
    lead_inv = 1 / den[-1] if not isinstance(den[-1], int) else Fraction(1, den[-1])
    quot = [Fraction(0)] * max(len(rem) - dq, 0)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = c * lead_inv
        quot[k - dq] = f
        for j in range(dq + 1):
            rem[k - dq + j] = rem[k - dq + j] - f * den[j]
    return PolyMV.from_coeffs(quot), PolyMV.from_coeffs(rem[:dq] if dq else [])


def make_monic(p: PolyMV) -> PolyMV:
    if p.is_zero():
        return p
    _, lead = p.leading()
    return p * (1 / lead if not isinstance(lead, int) else Fraction(1, lead))


def poly_gcd(p: PolyMV, q: PolyMV) -> PolyMV:
    """Monic gcd of univariate polynomials (zero if both are zero)."""
    while not q.is_zero():
        p, q = q, poly_divmod(p, q)[1]
    return make_monic(p)


def solve_quadratic(p: PolyMV) -> list[QuadElt]:
    """Exact roots of a rational polynomial of degree 1 or 2.

    Degree-2 roots live in Q(sqrt(D)) where ``disc = s**2 * D`` with ``D``
    squarefree; a double root is listed twice.

    >>> [str(r) for r in solve_quadratic(PolyMV.from_coeffs([-1, 1, 1]))]
    ['-1/2+1/2*sqrt(5)', '-1/2-1/2*sqrt(5)']
    """
    if not _all_rational(p) or not p.is_polynomial() or p.arity != 1:
        raise ValueError("solve_quadratic needs a univariate rational polynomial")
    deg = p.degree()
    if deg not in (1, 2):
        raise ValueError(f"solve_quadratic handles degree 1 or 2, got {deg}")
    cs = [_rational(c) for c in coeffs_of(p)]
    if deg == 1:
        return [QuadElt(-cs[0] / cs[1])]
    c, b, a = cs
    disc = b * b - 4 * a * c
    if disc == 0:
        r = QuadElt(-b / (2 * a))
        return [r, r]
    n = disc.numerator * disc.denominator
    s, D = squarefree_part(n)
    s = Fraction(s, disc.denominator)
    if D == 1:
        return [QuadElt((-b + s) / (2 * a)), QuadElt((-b - s) / (2 * a))]
    return [QuadElt(-b / (2 * a), s / (2 * a), D), QuadElt(-b / (2 * a), -s / (2 * a), D)]
