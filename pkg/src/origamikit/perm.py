"""Permutations of {1..d} and centralizers of transitive pairs.

Composition is right-to-left: ``p * q`` applies ``q`` first.
Images are stored 0-based; all text I/O is 1-based cycle notation.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .algebra.scalars import ParseError


class Permutation:
    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]) -> None:
        img = tuple(int(i) for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection on 0..{len(img) - 1}: {img}")
        self._img = img

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(range(d))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], d: int | None = None) -> Permutation:
        """Build from 1-based cycles; ``d`` defaults to the largest symbol."""
        cycles = [tuple(c) for c in cycles]
        top = max((max(c) for c in cycles if c), default=0)
        if d is None:
            d = max(top, 1)
        if top > d:
            raise ValueError(f"symbol {top} exceeds degree {d}")
        img = list(range(d))
        seen = set()
        for cyc in cycles:
            for k, x in enumerate(cyc):
                if x < 1 or x in seen:
                    raise ValueError(f"bad or repeated symbol {x} in cycles")
                seen.add(x)
                img[x - 1] = cyc[(k + 1) % len(cyc)] - 1
        return cls(img)

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> Permutation:
        return cls.from_cycles(parse_cycles(text), d)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return self._img

    def __call__(self, i: int) -> int:
        """Image of the 0-based point ``i``."""
        return self._img[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else inverse(self)
        out = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self._img) if i == x]

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, d={self.degree})"

    def __str__(self) -> str:
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles(self) if len(c) > 1)
        return text or "()"


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply ``q``, then ``p``."""
    _check_degree(p, q)
    return Permutation([p._img[x] for x in q._img])


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p._img):
        inv[x] = i
    return Permutation(inv)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """1-based cycles including fixed points, sorted by smallest element."""
    seen = [False] * p.degree
    out = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = p._img[x]
        out.append(tuple(cyc))
    return out


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    """``by o p o by^-1``; relabels the cycles of ``p`` through ``by``."""
    return by * p * inverse(by)


def commutator(h: Permutation, v: Permutation) -> Permutation:
    """``h v h^-1 v^-1``. Its cycles are the vertices of the origami (h, v)."""
    _check_degree(h, v)
    return h * v * inverse(h) * inverse(v)


def is_transitive(gens: Sequence[Permutation]) -> bool:
    d = gens[0].degree
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g._img[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    # forward images suffice: finite orbits are closed under inverses
    return len(seen) == d


def _propagate(h: Permutation, v: Permutation, target_h: Permutation, target_v: Permutation,
               first: int) -> Permutation | None:
    """The unique pi with pi(0) = first, pi h = target_h pi, pi v = target_v pi, if any."""
    d = h.degree
    pi = [-1] * d
    pi[0] = first
    stack = [0]
    hi, vi = inverse(h), inverse(v)
    ti_h, ti_v = inverse(target_h), inverse(target_v)
    while stack:
        x = stack.pop()
        y = pi[x]
        for src, dst in ((h, target_h), (v, target_v), (hi, ti_h), (vi, ti_v)):
            nx, ny = src._img[x], dst._img[y]
            if pi[nx] == -1:
                pi[nx] = ny
                stack.append(nx)
            elif pi[nx] != ny:
                return None
    if len(set(pi)) != d:
        return None
    return Permutation(pi)


def _require_transitive(h: Permutation, v: Permutation) -> None:
    _check_degree(h, v)
    if not is_transitive([h, v]):
        raise ValueError("the pair (h, v) does not act transitively")


def centralizer_pair(h: Permutation, v: Permutation) -> list[Permutation]:
    """All pi commuting with both h and v (h, v transitive), sorted."""
    _require_transitive(h, v)
    found = (_propagate(h, v, h, v, j) for j in range(h.degree))
    return sorted(p for p in found if p is not None)


def anti_centralizer_pair(h: Permutation, v: Permutation) -> list[Permutation]:
    """All pi with pi h pi^-1 = h^-1 and pi v pi^-1 = v^-1, sorted."""
    _require_transitive(h, v)
    hi, vi = inverse(h), inverse(v)
    found = (_propagate(h, v, hi, vi, j) for j in range(h.degree))
    return sorted(p for p in found if p is not None)


_CYCLES = re.compile(r"\s*\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse ``"(1 2 3)(4 5 6)"``; commas are accepted as separators."""
    pos = 0
    out = []
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _CYCLES.match(text, pos)
        if m is None:
            what = "unclosed cycle" if text[pos] == "(" else "expected '('"
            raise ParseError(f"{what} in cycle notation {text!r}", text, pos)
        body = m.group(1).replace(",", " ").split()
        try:
            cyc = tuple(int(tok) for tok in body)
        except ValueError:
            raise ParseError(f"non-integer symbol in cycle {m.group(0).strip()!r}", text, m.start(1)) from None
        if len(set(cyc)) != len(cyc):
            raise ParseError(f"repeated symbol in cycle {m.group(0).strip()!r}", text, m.start(1))
        if cyc:
            out.append(cyc)
        pos = m.end()
    return out
