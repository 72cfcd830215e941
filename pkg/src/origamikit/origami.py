"""Origamis (square-tiled surfaces) and their topological invariants.

An origami on ``d`` squares is a transitive pair of permutations: ``h`` sends a
square to its right neighbour and ``v`` to the square above it.
"""

from __future__ import annotations

import json
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

from .algebra.scalars import ParseError
from .perm import (
    Permutation,
    anti_centralizer_pair,
    centralizer_pair,
    commutator,
    inverse,
    is_transitive,
    parse_cycles,
)

SCHEMA = "origami-toolkit/1"

Direction = Literal["h", "v"]


class Origami:
    """A connected square-tiled surface given by its monodromy ``(h, v)``."""

    __slots__ = ("h", "v", "name")

    def __init__(self, h: Permutation, v: Permutation, name: str | None = None) -> None:
        if h.degree != v.degree:
            raise ValueError(f"degree mismatch: {h.degree} vs {v.degree}")
        if not is_transitive([h, v]):
            raise ValueError("monodromy is not transitive: the surface is disconnected")
        self.h = h
        self.v = v
        self.name = name

    @classmethod
    def from_cycles(cls, h: str, v: str, d: int | None = None, name: str | None = None) -> Origami:
        hc, vc = parse_cycles(h), parse_cycles(v)
        if d is None:
            d = max([1] + [x for c in hc + vc for x in c])
        return cls(Permutation.from_cycles(hc, d), Permutation.from_cycles(vc, d), name)

    @property
    def d(self) -> int:
        return self.h.degree

    def relabel(self, pi: Permutation) -> Origami:
        """The same surface with square ``i`` renamed ``pi(i)``."""
        pinv = inverse(pi)
        return Origami(pi * self.h * pinv, pi * self.v * pinv, self.name)

    def random_relabel(self, rng: random.Random) -> Origami:
        img = list(range(self.d))
        rng.shuffle(img)
        return self.relabel(Permutation(img))

    def __eq__(self, other) -> bool:
        return isinstance(other, Origami) and (self.h, self.v) == (other.h, other.v)

    def __hash__(self) -> int:
        return hash((self.h, self.v))

    def __repr__(self) -> str:
        label = f"{self.name}; " if self.name else ""
        return f"<Origami {label}h={self.h}; v={self.v}>"

    def to_text(self) -> str:
        return format_origami(self)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "name": self.name, "d": self.d, "h": str(self.h), "v": str(self.v)}


# --- invariants ---------------------------------------------------------

@dataclass(frozen=True)
class VertexProfile:
    """Cycle type of the commutator: ``counts[k]`` vertices of cone angle 2*pi*k."""

    counts: tuple[tuple[int, int], ...]
    vertices: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def n_vertices(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def cone_angles(self) -> list[int]:
        """Cone angles in units of 2*pi, one per vertex."""
        return sorted((k for k, c in self.counts for _ in range(c)), reverse=True)

    @property
    def zero_orders(self) -> list[int]:
        return [k - 1 for k in self.cone_angles]


def vertex_profile(o: Origami) -> VertexProfile:
    cyc = commutator(o.h, o.v).cycles()
    counts = Counter(len(c) for c in cyc)
    return VertexProfile(tuple(sorted(counts.items(), reverse=True)), tuple(cyc))


def stratum(o: Origami) -> tuple[int, ...]:
    """Orders of the zeros of the holomorphic 1-form, descending."""
    return tuple(k for k in vertex_profile(o).zero_orders if k > 0)


def genus(o: Origami) -> int:
    # Euler characteristic: V - 2d + d
    n = vertex_profile(o).n_vertices
    return 1 + (o.d - n) // 2


@dataclass(frozen=True)
class AutomorphismGroup:
    translations: tuple[Permutation, ...]
    anti: tuple[Permutation, ...]

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self.translations + self.anti

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def has_involution_minus_identity(self) -> bool:
        """True if some automorphism has derivative -I."""
        return bool(self.anti)

    @property
    def has_nontrivial_translation(self) -> bool:
        return len(self.translations) > 1


def translations(o: Origami) -> list[Permutation]:
    return centralizer_pair(o.h, o.v)


def automorphisms(o: Origami) -> AutomorphismGroup:
    return AutomorphismGroup(tuple(centralizer_pair(o.h, o.v)), tuple(anti_centralizer_pair(o.h, o.v)))


def _relabelled_code(h: tuple[int, ...], v: tuple[int, ...], hi, vi, start: int) -> tuple[int, ...]:
    d = len(h)
    label = [-1] * d
    order = [start]
    label[start] = 0
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for g in (h, hi, v, vi):
            y = g[x]
            if label[y] == -1:
                label[y] = len(order)
                order.append(y)
    new_h = tuple(label[h[x]] for x in order)
    new_v = tuple(label[v[x]] for x in order)
    return new_h + new_v


def canonical_form(o: Origami) -> tuple[int, ...]:
    """Invariant of the origami under simultaneous conjugation.

    Encoded as ``(h'(0), ..., h'(d-1), v'(0), ..., v'(d-1))`` after a
    breadth-first relabelling; the lexicographic minimum over start squares.
    """
    h, v = o.h.images, o.v.images
    hi, vi = inverse(o.h).images, inverse(o.v).images
    return min(_relabelled_code(h, v, hi, vi, s) for s in range(o.d))


def from_canonical(code: tuple[int, ...], name: str | None = None) -> Origami:
    d = len(code) // 2
    return Origami(Permutation(code[:d]), Permutation(code[d:]), name)


# --- cylinders ----------------------------------------------------------

@dataclass(frozen=True)
class Cylinder:
    """A maximal cylinder; ``rows`` lists its rows of squares bottom to top.

    Each row is ordered left to right along the ``h`` (or ``v``) cycle.
    """

    direction: str
    width: int
    height: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def squares(self) -> frozenset[int]:
        """Member squares, 1-based."""
        return frozenset(x + 1 for row in self.rows for x in row)


def _row_cycles(p: Permutation) -> list[tuple[int, ...]]:
    return [tuple(x - 1 for x in c) for c in p.cycles()]


def _horizontal_cylinders(h: Permutation, v: Permutation, direction: str) -> list[Cylinder]:
    rows = _row_cycles(h)
    row_of = {}
    for r, row in enumerate(rows):
        for x in row:
            row_of[x] = r
    comm = commutator(h, v)
    regular = {x for x in range(h.degree) if comm(x) == x}

    # above[r] = r' when row r continues into row r' (no saddle connection between)
    above: dict[int, int] = {}
    for r, row in enumerate(rows):
        targets = {row_of[v(x)] for x in row}
        if len(targets) != 1:
            continue
        r2 = targets.pop()
        if len(rows[r2]) != len(row):
            continue
        if any(v(h(x)) != h(v(x)) for x in row):
            continue
        if all(v(x) in regular and h(v(x)) in regular for x in row):
            above[r] = r2

    below = {r2: r for r, r2 in above.items()}
    out = []
    done = set()
    for r in range(len(rows)):
        if r in done:
            continue
        # walk down to the bottom row (or around a closed cycle of rows)
        start = r
        while start in below:
            start = below[start]
            if start == r:
                break
        chain = [start]
        done.add(start)
        cur = start
        while cur in above and above[cur] not in done:
            cur = above[cur]
            chain.append(cur)
            done.add(cur)
        base = rows[chain[0]]
        ordered = [base]
        for _ in chain[1:]:
            ordered.append(tuple(v(x) for x in ordered[-1]))
        out.append(Cylinder(direction, len(base), len(chain), tuple(ordered)))
    out.sort(key=lambda c: min(c.squares))
    return out


def cylinders(o: Origami, direction: Direction = "h") -> list[Cylinder]:
    """Cylinder decomposition in the horizontal (``"h"``) or vertical (``"v"``) direction."""
    if direction == "h":
        return _horizontal_cylinders(o.h, o.v, "h")
    if direction == "v":
        return _horizontal_cylinders(o.v, o.h, "v")
    raise ValueError(f"direction must be 'h' or 'v', got {direction!r}")


# --- text and JSON formats ----------------------------------------------

_FIELD = re.compile(r"\s*(?P<key>[A-Za-z_]\w*)\s*=\s*(?P<val>[^;]*)")


def parse_origami(text: str) -> Origami:
    """Parse ``name; h=(...); v=(...)`` (name and ``d=N`` optional)."""
    fields: dict[str, str] = {}
    starts: dict[str, int] = {}
    name = None
    offset = 0
    for k, part in enumerate(text.split(";")):
        stripped = part.strip()
        if not stripped:
            offset += len(part) + 1
            continue
        m = _FIELD.fullmatch(part)
        if m is None:
            if k == 0 and "=" not in part and "(" not in part:
                name = stripped
            else:
                raise ParseError(f"expected key=value, got {stripped!r}", text, offset)
        else:
            key = m.group("key")
            if key not in ("h", "v", "d", "name"):
                raise ParseError(f"unknown field {key!r}", text, offset + m.start("key"))
            val = m.group("val")
            fields[key] = val.strip()
            starts[key] = offset + m.start("val") + len(val) - len(val.lstrip())
        offset += len(part) + 1
    for key in ("h", "v"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}", text, len(text))
    d = None
    if "d" in fields:
        if not fields["d"].isdigit():
            raise ParseError(f"d must be a positive integer, got {fields['d']!r}", text, starts["d"])
        d = int(fields["d"])
    for key in ("h", "v"):
        try:
            parse_cycles(fields[key])
        except ParseError as exc:
            raise ParseError(exc.message, text, starts[key] + exc.pos) from None
    return Origami.from_cycles(fields["h"], fields["v"], d, fields.get("name", name))


def format_origami(o: Origami) -> str:
    head = f"{o.name}; " if o.name else ""
    used = max([0] + [x for c in o.h.cycles() + o.v.cycles() if len(c) > 1 for x in c])
    return f"{head}h={o.h}; v={o.v}" + (f"; d={o.d}" if used < o.d else "")


def origami_from_json(data: dict | str) -> Origami:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("schema", SCHEMA) != SCHEMA:
        raise ValueError(f"unsupported schema {data.get('schema')!r}")
    return Origami.from_cycles(data["h"], data["v"], int(data["d"]), data.get("name"))


CATALOG_TEXT = {
    "S": "S; h=(1 2 3)(4 5 6); v=(2 4)(3 5); d=6",
    "torus": "torus; h=(); v=(); d=1",
    "L3": "L3; h=(1 2); v=(1 3); d=3",
    "torus2x2": "torus2x2; h=(1 2)(3 4); v=(1 3)(2 4); d=4",
    "cylinder2": "cylinder2; h=(1 2); v=(); d=2",
}


def catalog() -> dict[str, Origami]:
    return {k: parse_origami(t) for k, t in CATALOG_TEXT.items()}


def get_origami(spec: str) -> Origami:
    """A catalog name or an inline origami text."""
    if spec in CATALOG_TEXT:
        return parse_origami(CATALOG_TEXT[spec])
    return parse_origami(spec)


def origami_S() -> Origami:
    return get_origami("S")
