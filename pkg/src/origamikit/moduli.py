"""The order-48 group of signed monomial maps acting on the parameter plane.

Points are pairs ``(l, m)`` of field elements; loci are zero sets of
polynomials in ``l, m`` kept in the canonical form of ``normalize_locus``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .algebra.poly import PolyMV, coeffs_of, normalize_locus, poly_divmod, poly_eval, solve_quadratic
from .algebra.quadratic import QuadElt
from .algebra.ratfunc import RatFunc
from .errors import VerificationError

L = PolyMV.var(0, 2)
M = PolyMV.var(1, 2)
ONE = PolyMV.constant(1, 2)
SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


class SignedMonomialMap:
    """``(l, m) -> (s1 l^a m^b, s2 l^c m^d)`` with ``ad - bc = +-1``."""

    __slots__ = ("signs", "matrix", "label")

    def __init__(self, signs: Sequence[int], matrix: Sequence[Sequence[int]], label: str = "") -> None:
        s = tuple(int(x) for x in signs)
        m = tuple(tuple(int(x) for x in row) for row in matrix)
        if any(x not in (1, -1) for x in s) or len(s) != 2:
            raise ValueError(f"signs must be +-1, got {signs}")
        if abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 1:
            raise ValueError(f"exponent matrix {m} is not invertible over Z")
        self.signs = s
        self.matrix = m
        self.label = label

    @property
    def key(self):
        return (self.signs, self.matrix)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedMonomialMap) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: SignedMonomialMap) -> SignedMonomialMap:
        """Composition ``self o other`` (apply ``other`` first)."""
        A, B = self.matrix, other.matrix
        t1, t2 = other.signs
        signs = tuple(
            s * (t1 if A[i][0] % 2 else 1) * (t2 if A[i][1] % 2 else 1) for i, s in enumerate(self.signs)
        )
        mat = tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)) for i in range(2))
        return SignedMonomialMap(signs, mat, self.label + other.label)

    def inverse(self) -> SignedMonomialMap:
        (a, b), (c, d) = self.matrix
        det = a * d - b * c
        inv = ((d * det, -b * det), (-c * det, a * det))
        s1, s2 = self.signs
        signs = tuple((s1 if inv[i][0] % 2 else 1) * (s2 if inv[i][1] % 2 else 1) for i in range(2))
        return SignedMonomialMap(signs, inv)

    def is_identity(self) -> bool:
        return self.key == IDENTITY.key

    def __call__(self, point):
        return act_on_point(self, point)

    def __repr__(self) -> str:
        return f"SignedMonomialMap({self.signs}, {self.matrix}, {self.label!r})"

    def __str__(self) -> str:
        def coord(s, row):
            parts = []
            for name, e in zip("lm", row):
                if e == 1:
                    parts.append(name)
                elif e:
                    parts.append(f"{name}^{e}")
            body = "*".join(parts) or "1"
            return ("-" if s < 0 else "") + body

        return f"(l, m) -> ({coord(self.signs[0], self.matrix[0])}, {coord(self.signs[1], self.matrix[1])})"


IDENTITY = SignedMonomialMap((1, 1), ((1, 0), (0, 1)), "")

GENERATORS = {
    "a": SignedMonomialMap((1, 1), ((-1, 0), (0, -1)), "a"),
    "b": SignedMonomialMap((1, 1), ((0, 1), (1, 0)), "b"),
    "c": SignedMonomialMap((1, 1), ((-1, 0), (-1, 1)), "c"),
    "d": SignedMonomialMap((-1, 1), ((1, 0), (0, 1)), "d"),
    "e": SignedMonomialMap((-1, -1), ((1, 0), (0, 1)), "e"),
}


def element(word: str) -> SignedMonomialMap:
    """The product of generator letters, read as a composition (rightmost first)."""
    out = IDENTITY
    for ch in word.replace(" ", ""):
        if ch not in GENERATORS:
            raise ValueError(f"unknown generator {ch!r} in {word!r}")
        out = out * GENERATORS[ch]
    return SignedMonomialMap(out.signs, out.matrix, word)


def _order(g: SignedMonomialMap, limit: int = 48) -> int:
    x = g
    for n in range(1, limit + 1):
        if x.is_identity():
            return n
        x = x * g
    raise ValueError("element order exceeds the group size")


RELATIONS = (
    ("aa", ""), ("bb", ""), ("dd", ""), ("ee", ""), ("bcbcbc", ""),
    ("ab", "ba"), ("ac", "ca"),
    ("ada", "d"), ("aea", "e"), ("bdb", "de"), ("beb", "e"), ("cdc", "e"), ("cec", "d"),
)


@dataclass(frozen=True)
class GammaGroup:
    elements: tuple[SignedMonomialMap, ...]
    relations: tuple[tuple[str, str, bool], ...]
    v4: tuple[SignedMonomialMap, ...]
    v4_normal: bool
    quotient_order: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def find(self, g: SignedMonomialMap) -> SignedMonomialMap:
        """The group element equal to ``g``, carrying its shortest word label."""
        for x in self.elements:
            if x == g:
                return x
        raise KeyError(f"{g!r} is not in the group")


@lru_cache(maxsize=1)
def gamma_group() -> GammaGroup:
    """Closure of the five generators, with shortest word labels."""
    seen = {IDENTITY: IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        for g in GENERATORS.values():
            y = g * x
            if y not in seen:
                seen[y] = y
                queue.append(y)
    elements = tuple(seen.values())
    rel = tuple((lhs, rhs, element(lhs) == element(rhs)) for lhs, rhs in RELATIONS)
    for lhs, rhs, ok in rel:
        if not ok:
            raise VerificationError(f"relation {lhs} = {rhs or 'id'} fails")
    if len(elements) != 48:
        raise VerificationError(f"group closure has order {len(elements)}, expected 48")
    v4 = _closure([GENERATORS["d"], GENERATORS["e"]])
    v4_set = set(v4)
    normal = all(g * n * g.inverse() in v4_set for g in elements for n in v4)
    if len(v4) != 4 or not normal:
        raise VerificationError("<d, e> is not a normal subgroup of order 4")
    return GammaGroup(elements, rel, tuple(sorted(v4, key=lambda x: len(x.label))), normal, len(elements) // len(v4))


def _closure(gens: Iterable[SignedMonomialMap]) -> list[SignedMonomialMap]:
    gens = list(gens)
    out = [IDENTITY]
    seen = {IDENTITY}
    k = 0
    while k < len(out):
        x = out[k]
        k += 1
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


@dataclass(frozen=True)
class Subgroup:
    elements: tuple[SignedMonomialMap, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_abelian(self) -> bool:
        return all(x * y == y * x for x in self.elements for y in self.elements)

    @property
    def labels(self) -> list[str]:
        return [x.label or "id" for x in self.elements]

    def __contains__(self, g) -> bool:
        if isinstance(g, str):
            g = element(g)
        return g in set(self.elements)


# --- points ---------------------------------------------------------------

def param_point(lam, mu) -> tuple[QuadElt, QuadElt]:
    return (QuadElt.coerce(lam), QuadElt.coerce(mu))


def in_parameter_space(p) -> bool:
    """``l, m`` not in ``{0, 1, -1}`` and ``l != +-m``."""
    lam, mu = p
    bad = (0, 1, -1)
    return lam not in bad and mu not in bad and lam != mu and lam != -mu


def _power(x: QuadElt, e: int) -> QuadElt:
    if e < 0:
        return x.inverse() ** (-e)
    return x ** e


def act_on_point(g: SignedMonomialMap, p):
    lam, mu = (QuadElt.coerce(x) for x in p)
    if not lam or not mu:
        raise ValueError("coordinates must be nonzero")
    out = []
    for s, (e1, e2) in zip(g.signs, g.matrix):
        out.append(_power(lam, e1) * _power(mu, e2) * s)
    return tuple(out)


def _require_in_p(p) -> None:
    if not in_parameter_space(p):
        raise ValueError(f"point {format_point(p)} is outside the parameter space")


def orbit_of_point(p) -> list:
    _require_in_p(p)
    out = []
    seen = set()
    for g in gamma_group():
        q = act_on_point(g, p)
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out


def stabilizer_of_point(p) -> Subgroup:
    _require_in_p(p)
    p = param_point(*p)
    return Subgroup(tuple(g for g in gamma_group() if act_on_point(g, p) == p))


def same_orbit(p, q) -> bool:
    """Orbit membership compared coordinate-wise in exact arithmetic.

    Elements of different quadratic fields are equal only when both are
    rational, so no compositum is needed.
    """
    q = param_point(*q)
    return q in set(orbit_of_point(p))


def format_point(p) -> str:
    return f"({p[0]}, {p[1]})"


# --- loci -------------------------------------------------------------------

def v_poly(e1: int, e2: int) -> PolyMV:
    """``e2 m (e1 l + 1) - e1 l``."""
    return M * (L * e1 + 1) * e2 - L * e1


def w_poly(e1: int, e2: int) -> PolyMV:
    """``1 + e1 l - e2 m``."""
    return ONE + L * e1 - M * e2


def _canonical_tags() -> dict[PolyMV, tuple[str, int, int]]:
    out = {}
    for e1, e2 in SIGNS:
        out[normalize_locus(v_poly(e1, e2))] = ("V", e1, e2)
        out[normalize_locus(w_poly(e1, e2))] = ("W", e1, e2)
    return out


_TAGS = _canonical_tags()


@dataclass(frozen=True)
class LocusEq:
    poly: PolyMV
    tag: tuple[str, int, int] | None = field(default=None, compare=False)

    @classmethod
    def of(cls, p: PolyMV) -> LocusEq:
        q = normalize_locus(p)
        return cls(q, _TAGS.get(q))

    @property
    def name(self) -> str:
        if self.tag is None:
            return self.poly.to_string()
        fam, e1, e2 = self.tag
        return f"{fam}[{e1:+d},{e2:+d}]"

    def contains(self, p) -> bool:
        return poly_eval(self.poly, p) == 0

    def __str__(self) -> str:
        return f"{self.name}: {self.poly.to_string()} = 0"


def V(e1: int = 1, e2: int = 1) -> LocusEq:
    return LocusEq.of(v_poly(e1, e2))


def W(e1: int = 1, e2: int = 1) -> LocusEq:
    return LocusEq.of(w_poly(e1, e2))


def all_components() -> list[LocusEq]:
    return [V(*s) for s in SIGNS] + [W(*s) for s in SIGNS]


def act_on_locus(g: SignedMonomialMap, eq: LocusEq | PolyMV) -> LocusEq:
    """``g`` applied to the zero set: substitute ``g^-1`` and normalize."""
    poly = eq.poly if isinstance(eq, LocusEq) else eq
    h = g.inverse()
    return LocusEq.of(poly.substitute_monomial_map(h.signs, h.matrix))


def orbit_of_locus(eq: LocusEq) -> list[LocusEq]:
    out = []
    for g in gamma_group():
        x = act_on_locus(g, eq)
        if x not in out:
            out.append(x)
    return out


def stabilizer_of_locus(eq: LocusEq) -> Subgroup:
    return Subgroup(tuple(g for g in gamma_group() if act_on_locus(g, eq) == eq))


def action_table(gens: str = "abcde") -> dict[tuple[str, str], str]:
    """``(generator, component) -> image component`` over the eight components."""
    out = {}
    for ch in gens:
        for X in all_components():
            out[(ch, X.name)] = act_on_locus(GENERATORS[ch], X).name
    return out


# --- root finding ---------------------------------------------------------

def _integer_coeffs(p: PolyMV) -> list[int]:
    cs = [Fraction(c.a) if isinstance(c, QuadElt) else Fraction(c) for c in coeffs_of(p)]
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in cs]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [k for k in range(1, n + 1) if n % k == 0]


def rational_roots(p: PolyMV) -> list[Fraction]:
    """Distinct rational roots of a univariate rational polynomial."""
    cs = _integer_coeffs(p)
    roots = set()
    if cs[0] == 0:
        roots.add(Fraction(0))
    while cs and cs[0] == 0:
        cs = cs[1:]
    if len(cs) <= 1:
        return sorted(roots)
    for num in _divisors(cs[0]):
        for den in _divisors(cs[-1]):
            for r in (Fraction(num, den), Fraction(-num, den)):
                if sum(c * r ** k for k, c in enumerate(cs)) == 0:
                    roots.add(r)
    return sorted(roots)


def small_roots(p: PolyMV) -> list[QuadElt]:
    """Distinct roots of a rational polynomial whose irrational part has degree <= 2."""
    if p.degree() <= 0:
        return []
    roots = [QuadElt(r) for r in rational_roots(p)]
    rest = p
    for r in roots:
        while True:
            q, rem = poly_divmod(rest, PolyMV.from_coeffs([-r.a, 1]))
            if not rem.is_zero():
                break
            rest = q
    if rest.degree() > 2:
        raise ValueError(f"irreducible factor of degree {rest.degree()} is out of reach")
    if rest.degree() > 0:
        for r in solve_quadratic(rest):
            if r not in roots:
                roots.append(r)
    return roots


# --- intersections ----------------------------------------------------------

def _mu_linear_parts(p: PolyMV) -> tuple[PolyMV, PolyMV]:
    """``p = A(l) m + B(l)``."""
    if p.degree(1) > 1 or not p.is_polynomial():
        raise ValueError("locus is not linear in m; outside the V/W families")
    A, B = {}, {}
    for (i, j), c in p.items():
        (A if j else B)[(i,)] = c
    return PolyMV(A, 1), PolyMV(B, 1)


def intersect_loci(eq1: LocusEq, eq2: LocusEq) -> list[tuple[QuadElt, QuadElt]]:
    """Exact points of ``P`` on both loci, by eliminating ``m``."""
    if eq1 == eq2:
        raise ValueError("loci coincide")
    A, B = _mu_linear_parts(eq1.poly)
    C, D = _mu_linear_parts(eq2.poly)
    res = A * D - B * C
    if res.is_zero():
        raise ValueError("loci share a component")
    if res.degree() > 2:
        raise ValueError(f"elimination has degree {res.degree()} > 2")
    out = []
    for lam in small_roots(res):
        a, c = poly_eval(A, (lam,)), poly_eval(C, (lam,))
        if a:
            mu = -poly_eval(B, (lam,)) / a
        elif c:
            mu = -poly_eval(D, (lam,)) / c
        else:
            continue
        p = param_point(lam, mu)
        if in_parameter_space(p) and eq1.contains(p) and eq2.contains(p) and p not in out:
            out.append(p)
    return out


# --- fixed points on V ------------------------------------------------------

def fixed_points_on_v(g: SignedMonomialMap) -> list[tuple[QuadElt, QuadElt]]:
    """Points ``F(l) = (l, l/(l+1))`` of ``V`` in ``P`` fixed by ``g``."""
    lam = RatFunc.var()
    image = []
    base = (lam, lam / (lam + 1))
    for s, (e1, e2) in zip(g.signs, g.matrix):
        image.append(base[0] ** e1 * base[1] ** e2 * s)
    common = None
    for x, y in zip(image, base):
        num = (x - y).num
        if num.is_zero():
            continue
        common = num if common is None else _gcd(common, num)
    if common is None:
        raise ValueError("element fixes V pointwise")
    out = []
    for r in small_roots(common):
        if r == -1:
            continue
        p = param_point(r, r / (r + 1))
        if in_parameter_space(p) and act_on_point(g, p) == p:
            out.append(p)
    return out


def _gcd(p: PolyMV, q: PolyMV) -> PolyMV:
    from .algebra.poly import poly_gcd

    return poly_gcd(p, q)


def points_with_nontrivial_stabilizer() -> list[tuple[QuadElt, QuadElt]]:
    """Points of ``V`` fixed by some non-identity element of the group.

    They are the fixed points of the stabilizer of ``V`` together with the
    intersections of ``V`` with the other seven components.
    """
    v = V()
    out = []
    for g in stabilizer_of_locus(v).elements:
        if not g.is_identity():
            for p in fixed_points_on_v(g):
                if p not in out:
                    out.append(p)
    for X in all_components():
        if X != v:
            for p in intersect_loci(v, X):
                if p not in out:
                    out.append(p)
    return out


# --- the curve equation -----------------------------------------------------

@dataclass(frozen=True)
class DerivationRecord:
    expansion_residual: PolyMV
    factorization_residuals: tuple[PolyMV, PolyMV]
    factor_tags: tuple[tuple[str, int, int], ...]
    v4_action: tuple[tuple[str, str, str, bool], ...]


def verify_curve_equation_derivation() -> DerivationRecord:
    """Polynomial identities behind the four V components.

    Raises :class:`VerificationError` with the residual on failure.
    """
    lhs = L ** 4 + M ** 4 + L ** 4 * M ** 4 - L ** 2 * M ** 2 * 2 - L ** 4 * M ** 2 * 2 - L ** 2 * M ** 4 * 2
    rhs = (-(L ** 2) - M ** 2 + L ** 2 * M ** 2) ** 2 - L ** 2 * M ** 2 * 4
    r0 = lhs - rhs
    if not r0.is_zero():
        raise VerificationError("expansion identity fails", r0)
    lm = L * M
    factors = ((lm - L + M, lm + L - M), (lm - L - M, lm + L + M))
    r1 = L ** 2 * M ** 2 - (L - M) ** 2 - factors[0][0] * factors[0][1]
    r2 = L ** 2 * M ** 2 - (L + M) ** 2 - factors[1][0] * factors[1][1]
    for r in (r1, r2):
        if not r.is_zero():
            raise VerificationError("factorization identity fails", r)
    tags = tuple(LocusEq.of(f).tag for pair in factors for f in pair)
    if set(tags) != {("V", e1, e2) for e1, e2 in SIGNS}:
        raise VerificationError(f"factors are not the four V components: {tags}")
    rows = []
    expected = {"d": lambda e1, e2: (-e1, e2), "e": lambda e1, e2: (-e1, -e2), "ed": lambda e1, e2: (e1, -e2)}
    for word, rule in expected.items():
        for e1, e2 in SIGNS:
            got = act_on_locus(element(word), V(e1, e2))
            want = V(*rule(e1, e2))
            ok = got == want
            rows.append((word, V(e1, e2).name, got.name, ok))
            if not ok:
                raise VerificationError(f"{word} maps {V(e1, e2).name} to {got.name}, expected {want.name}")
    return DerivationRecord(r0, (r1, r2), tags, tuple(rows))


# --- named special points ---------------------------------------------------

_S5 = QuadElt.sqrt(5)
_S3 = QuadElt.sqrt(-3)
HALF = Fraction(1, 2)

SPECIAL_POINTS = {
    "q1": param_point((_S3 - 1) * HALF, (_S3 + 1) * HALF),
    "q2": param_point((-_S3 - 1) * HALF, (-_S3 + 1) * HALF),
    "r1": param_point((_S5 - 1) * HALF, (-_S5 + 3) * HALF),
    "r2": param_point((-_S5 - 1) * HALF, (_S5 + 3) * HALF),
    "r3": param_point((_S5 + 1) * HALF, (_S5 - 1) * HALF),
    "r4": param_point((-_S5 + 1) * HALF, (-_S5 - 1) * HALF),
    "r5": param_point((_S5 - 3) * HALF, (-_S5 + 1) * HALF),
    "r6": param_point((-_S5 - 3) * HALF, (_S5 + 1) * HALF),
}
