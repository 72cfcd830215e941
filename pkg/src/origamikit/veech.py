"""The SL2(Z) action on origamis and the Veech group as an orbit stabilizer.

The action is a right action, applied letter by letter from left to right::

    o . t = (h, v h^-1)        o . s = (v^-1, h)

With this convention the stabilizer of the base origami is a subgroup
``Gamma`` of SL2(Z), and the spanning-tree words of the orbit are right coset
representatives: ``SL2(Z) = disjoint union of Gamma * rep``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra.scalars import ParseError
from .origami import Origami, canonical_form, from_canonical
from .perm import inverse


# --- matrices and words -------------------------------------------------

@dataclass(frozen=True)
class Mat2Z:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def __mul__(self, other: Mat2Z) -> Mat2Z:
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> Mat2Z:
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> Mat2Z:
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


IDENTITY = Mat2Z(1, 0, 0, 1)
S_MAT = Mat2Z(0, -1, 1, 0)
T_MAT = Mat2Z(1, 1, 0, 1)

_LETTER_MAT = {
    ("s", 1): S_MAT,
    ("s", -1): S_MAT.inverse(),
    ("t", 1): T_MAT,
    ("t", -1): T_MAT.inverse(),
}

Letter = tuple[str, int]


class Word:
    """A freely reduced word in ``s, s^-1, t, t^-1``."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()) -> None:
        out: list[Letter] = []
        for g, e in letters:
            if g not in ("s", "t") or e not in (1, -1):
                raise ValueError(f"bad letter {(g, e)!r}")
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        self.letters = tuple(out)

    @classmethod
    def parse(cls, text: str) -> Word:
        return parse_word(text)

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word((g, -e) for g, e in reversed(self.letters))

    def matrix(self) -> Mat2Z:
        m = IDENTITY
        for letter in self.letters:
            m = m * _LETTER_MAT[letter]
        return m

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if not self.letters:
            return "I"
        parts = []
        k = 0
        while k < len(self.letters):
            g, e = self.letters[k]
            n = 1
            while k + n < len(self.letters) and self.letters[k + n] == (g, e):
                n += 1
            power = n * e
            parts.append(g if power == 1 else f"{g}^{power}")
            k += n
        return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<g>[st])(?:\^\s*(?P<p>[+-]?\d+))?|(?P<id>I))")


def parse_word(text: str) -> Word:
    """Parse ``"t s t^-2"``, ``"tst^-2"`` or ``"I"``."""
    pos = 0
    letters: list[Letter] = []
    text_s = text.rstrip()
    while pos < len(text_s):
        m = _TOKEN.match(text_s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character in word {text!r}", text, pos)
        if m.group("g"):
            p = int(m.group("p")) if m.group("p") else 1
            letters.extend([(m.group("g"), 1 if p > 0 else -1)] * abs(p))
        pos = m.end()
    return Word(letters)


# --- the action ---------------------------------------------------------

def act(letter: Letter | str, o: Origami) -> Origami:
    """Action of one generator (``"s"``, ``"t"``, ``"s^-1"``, ``"t^-1"``)."""
    if isinstance(letter, str):
        (letter,) = parse_word(letter).letters
    h, v = o.h, o.v
    if letter == ("t", 1):
        return Origami(h, v * inverse(h), o.name)
    if letter == ("t", -1):
        return Origami(h, v * h, o.name)
    if letter == ("s", 1):
        return Origami(inverse(v), h, o.name)
    if letter == ("s", -1):
        return Origami(v, inverse(h), o.name)
    raise ValueError(f"bad letter {letter!r}")


def apply_word(w: Word | str, o: Origami) -> Origami:
    if isinstance(w, str):
        w = parse_word(w)
    for letter in w.letters:
        o = act(letter, o)
    return o


def is_member(w: Word | str, o: Origami) -> bool:
    """Whether the matrix of ``w`` lies in the Veech group of ``o``."""
    return canonical_form(apply_word(w, o)) == canonical_form(o)


# --- orbit enumeration --------------------------------------------------

BFS_ORDER: tuple[Letter, ...] = (("t", 1), ("s", 1), ("t", -1), ("s", -1))


@dataclass(frozen=True)
class CosetGraph:
    """The SL2(Z)-orbit of an origami, node 0 being the base.

    ``t_perm[u]`` / ``s_perm[u]`` is the node reached from ``u`` by acting
    with ``t`` / ``s``; ``words[u]`` is the spanning-tree word with
    ``base . words[u] = u``.
    """

    nodes: tuple[tuple[int, ...], ...]
    t_perm: tuple[int, ...]
    s_perm: tuple[int, ...]
    words: tuple[Word, ...]
    parent: tuple[tuple[int, Letter] | None, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def step(self, u: int, letter: Letter) -> int:
        g, e = letter
        perm = self.t_perm if g == "t" else self.s_perm
        if e == 1:
            return perm[u]
        return perm.index(u)

    def tree_edges(self) -> set[tuple[int, str]]:
        """Positive edges ``(u, g)`` used by the spanning tree."""
        out = set()
        for child, par in enumerate(self.parent):
            if par is None:
                continue
            u, (g, e) = par
            out.add((u, g) if e == 1 else (child, g))
        return out


def coset_graph(o: Origami) -> CosetGraph:
    base = canonical_form(o)
    index = {base: 0}
    nodes = [base]
    words = [Word()]
    parent: list = [None]
    t_img: dict[int, int] = {}
    s_img: dict[int, int] = {}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        ou = from_canonical(nodes[u])
        for letter in BFS_ORDER:
            code = canonical_form(act(letter, ou))
            if code not in index:
                index[code] = len(nodes)
                nodes.append(code)
                words.append(words[u] * Word([letter]))
                parent.append((u, letter))
                queue.append(index[code])
            w = index[code]
            if letter == ("t", 1):
                t_img[u] = w
            elif letter == ("s", 1):
                s_img[u] = w
    n = len(nodes)
    return CosetGraph(
        tuple(nodes),
        tuple(t_img[u] for u in range(n)),
        tuple(s_img[u] for u in range(n)),
        tuple(words),
        tuple(parent),
    )


@dataclass(frozen=True)
class Cusp:
    width: int
    cosets: tuple[int, ...]
    representative: Word


@dataclass(frozen=True)
class VeechGroupResult:
    """Veech group data of an origami inside SL2(Z).

    ``psl_index`` and the cusp, elliptic and genus data refer to the image of
    the group in PSL2(Z).
    """

    index: int
    psl_index: int
    contains_minus_identity: bool
    coset_reps: tuple[Word, ...]
    generators: tuple[tuple[Word, Mat2Z], ...]
    cusps: tuple[Cusp, ...]
    e2: int
    e3: int
    quotient_genus: int
    graph: CosetGraph
    psl_classes: tuple[tuple[int, ...], ...]

    @property
    def cusp_widths(self) -> list[int]:
        return sorted((c.width for c in self.cusps), reverse=True)


def _orbits(perm: Sequence[int], points: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for p in points:
        if p in seen:
            continue
        orb = [p]
        seen.add(p)
        q = perm[p]
        while q not in seen:
            orb.append(q)
            seen.add(q)
            q = perm[q]
        out.append(tuple(orb))
    return out


def quotient_genus_formula(psl_index: int, e2: int, e3: int, n_cusps: int) -> int:
    g = 1 + Fraction(psl_index, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(n_cusps, 2)
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"inconsistent modular data: genus {g}")
    return int(g)


def veech_group(o: Origami) -> VeechGroupResult:
    """Index, coset representatives, Schreier generators, cusps and genus."""
    graph = coset_graph(o)
    n = len(graph)
    tree = graph.tree_edges()
    gens = []
    for u in range(n):
        for g in ("t", "s"):
            if (u, g) in tree:
                continue
            target = graph.step(u, (g, 1))
            w = graph.words[u] * Word([(g, 1)]) * graph.words[target].inverse()
            gens.append((w, w.matrix()))

    # PSL2(Z): identify u with u.(-I) = u.s^2
    minus = tuple(graph.s_perm[graph.s_perm[u]] for u in range(n))
    contains_minus = minus[0] == 0
    classes = _orbits(minus, range(n))
    cls_of = {u: k for k, c in enumerate(classes) for u in c}
    t_cls = [cls_of[graph.t_perm[c[0]]] for c in classes]
    s_cls = [cls_of[graph.s_perm[c[0]]] for c in classes]
    m = len(classes)
    e2 = sum(1 for k in range(m) if s_cls[k] == k)
    e3 = sum(1 for k in range(m) if t_cls[s_cls[k]] == k)

    cusps = []
    for orb in _orbits(t_cls, range(m)):
        nodes = tuple(sorted(u for k in orb for u in classes[k]))
        rep = graph.words[min(classes[orb[0]])]
        cusps.append(Cusp(len(orb), nodes, rep))

    return VeechGroupResult(
        index=n,
        psl_index=m,
        contains_minus_identity=contains_minus,
        coset_reps=graph.words,
        generators=tuple(gens),
        cusps=tuple(cusps),
        e2=e2,
        e3=e3,
        quotient_genus=quotient_genus_formula(m, e2, e3, len(cusps)),
        graph=graph,
        psl_classes=tuple(classes),
    )
