"""Fundamental domains of Veech groups as unions of modular triangles.

The standard triangle ``F`` has vertices ``rho2 = -1/2 + i*sqrt(3)/2``,
``rho = 1/2 + i*sqrt(3)/2`` and ``oo``; each coset representative ``g``
contributes the tile ``g(F)`` whose vertices are exact elements of
Q(sqrt(-3)) (or ``oo``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra.quadratic import QuadElt
from .veech import S_MAT, T_MAT, Mat2Z, VeechGroupResult, Word, is_member


class _Infinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "oo"

    __str__ = __repr__


INFINITY = _Infinity()

RHO2 = QuadElt(Fraction(-1, 2), Fraction(1, 2), -3)
RHO = QuadElt(Fraction(1, 2), Fraction(1, 2), -3)
CORNERS = ("rho2", "rho", "oo")


def mobius(m: Mat2Z, z):
    """``(a z + b) / (c z + d)`` on Q(sqrt(-3)) plus infinity."""
    if z is INFINITY:
        return INFINITY if m.c == 0 else QuadElt(Fraction(m.a, m.c))
    den = m.c * z + m.d
    if den == 0:
        return INFINITY
    return (m.a * z + m.b) / den


@dataclass(frozen=True)
class Tile:
    coset: int
    word: Word
    matrix: Mat2Z
    vertices: tuple  # images of (rho2, rho, oo)


@dataclass(frozen=True)
class SidePairing:
    """``element`` maps side ``side_from`` of tile ``tile_from`` onto ``side_to`` of ``tile_to``."""

    tile_from: int
    side_from: str
    tile_to: int
    side_to: str
    element: Word


@dataclass(frozen=True)
class FundamentalDomain:
    tiles: tuple[Tile, ...]
    pairings: tuple[SidePairing, ...]
    n_faces: int
    n_edges: int
    n_vertices: int
    n_cusp_vertices: int
    n_fold_points: int

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    @property
    def genus(self) -> int:
        chi = self.euler_characteristic
        if chi % 2:
            raise ArithmeticError(f"odd Euler characteristic {chi}")
        return (2 - chi) // 2

    def to_svg(self, **kwargs) -> str:
        return render_svg(self, **kwargs)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def fundamental_domain(r: VeechGroupResult, origami=None) -> FundamentalDomain:
    """Tiles ``rep(F)`` for the PSL2(Z) cosets, with side pairings.

    The quotient triangulation is counted from the pairings alone; tile
    vertices that coincide in the plane are checked to land in the same
    vertex class. When ``origami`` is given, every pairing element is also
    re-verified to lie in its Veech group.
    """
    graph = r.graph
    classes = r.psl_classes
    cls_of = {u: k for k, c in enumerate(classes) for u in c}
    tiles = []
    for k, c in enumerate(classes):
        u = min(c)
        w = graph.words[u]
        m = w.matrix()
        tiles.append(Tile(k, w, m, tuple(mobius(m, z) for z in (RHO2, RHO, INFINITY))))

    def tile_step(k: int, g: str) -> int:
        u = min(classes[k])
        return cls_of[graph.step(u, (g, 1))]

    def pairing_element(k: int, g: str, target: int) -> Word:
        # lands in -Gamma when the node reached is the -I partner of the
        # target tile's representative; s^2 = -I fixes the sign
        elt = tiles[k].word * Word([(g, 1)]) * tiles[target].word.inverse()
        if graph.step(min(classes[k]), (g, 1)) != min(classes[target]):
            elt = elt * Word([("s", 1), ("s", 1)])
        return elt

    uf = _UnionFind()
    pairings = []
    folds = 0
    b_edges = set()
    for k, tile in enumerate(tiles):
        # right side of k is glued to the left side of k.t
        kt = tile_step(k, "t")
        elt = pairing_element(k, "t", kt)
        pairings.append(SidePairing(kt, "left", k, "right", elt))
        uf.union((k, "rho"), (kt, "rho2"))
        uf.union((k, "oo"), (kt, "oo"))
        # bottom arc of k is glued to the bottom arc of k.s, reversed
        ks = tile_step(k, "s")
        b_edges.add(frozenset((k, ks)))
        if ks == k:
            folds += 1
        if k <= ks:
            elt = pairing_element(k, "s", ks)
            pairings.append(SidePairing(ks, "bottom", k, "bottom", elt))
        uf.union((k, "rho2"), (ks, "rho"))
        uf.union((k, "rho"), (ks, "rho2"))

    for p in pairings:
        _check_pairing(p, tiles)
        if origami is not None and not is_member(p.element, origami):
            raise AssertionError(f"side pairing {p.element} is not in the Veech group")

    # geometric coincidence inside the plane must agree with the gluing classes
    seen: dict = {}
    for k, tile in enumerate(tiles):
        for name, z in zip(CORNERS, tile.vertices):
            if z is INFINITY:
                continue
            key = z
            if key in seen and uf.find(seen[key]) != uf.find((k, name)):
                raise AssertionError(f"coincident tile vertices {z} in different classes")
            seen.setdefault(key, (k, name))

    roots = {uf.find((k, name)) for k in range(len(tiles)) for name in CORNERS}
    cusp_roots = {uf.find((k, "oo")) for k in range(len(tiles))}
    n_faces = len(tiles)
    n_edges = len(tiles) + len(b_edges)
    n_vertices = len(roots) + folds
    return FundamentalDomain(
        tiles=tuple(tiles),
        pairings=tuple(pairings),
        n_faces=n_faces,
        n_edges=n_edges,
        n_vertices=n_vertices,
        n_cusp_vertices=len(cusp_roots),
        n_fold_points=folds,
    )


_SIDES = {"left": (0, 2), "right": (1, 2), "bottom": (0, 1)}


def _check_pairing(p: SidePairing, tiles) -> None:
    m = p.element.matrix()
    src = [tiles[p.tile_from].vertices[i] for i in _SIDES[p.side_from]]
    dst = [tiles[p.tile_to].vertices[i] for i in _SIDES[p.side_to]]
    img = [mobius(m, z) for z in src]
    if not (_same_set(img, dst)):
        raise AssertionError(f"pairing {p} does not match exact vertices: {img} vs {dst}")


def _same_set(xs, ys) -> bool:
    def key(z):
        return ("oo",) if z is INFINITY else (0, z)

    return sorted(map(repr, map(key, xs))) == sorted(map(repr, map(key, ys)))


# --- SVG ----------------------------------------------------------------

def _to_complex(z) -> complex | None:
    return None if z is INFINITY else complex(z)


def _geodesic(z1, z2, y_top: float, n: int = 48) -> list[complex]:
    """Sample points along the hyperbolic geodesic from ``z1`` to ``z2``."""
    if z1 is None:
        return [p for p in reversed(_geodesic(z2, None, y_top, n))]
    if z2 is None:
        return [z1, complex(z1.real, max(y_top, z1.imag))]
    if abs(z1.real - z2.real) < 1e-12:
        return [z1, z2]
    c = (abs(z1) ** 2 - abs(z2) ** 2) / (2 * (z1.real - z2.real))
    r = abs(z1 - c)
    a1 = cmath.phase(z1 - c)
    a2 = cmath.phase(z2 - c)
    return [c + r * cmath.exp(1j * (a1 + (a2 - a1) * k / n)) for k in range(n + 1)]


def render_svg(fd: FundamentalDomain, width: int = 640, y_top: float = 2.2) -> str:
    """Floating-point drawing of the tiles; for display only."""
    polys = []
    for tile in fd.tiles:
        a, b, c = (_to_complex(z) for z in tile.vertices)
        pts = _geodesic(a, b, y_top) + _geodesic(b, c, y_top)[1:] + _geodesic(c, a, y_top)[1:]
        polys.append((tile, pts))
    xs = [p.real for _, pts in polys for p in pts]
    ys = [p.imag for _, pts in polys for p in pts]
    x0, x1 = min(xs) - 0.1, max(xs) + 0.1
    y1 = max(ys) + 0.1
    scale = width / (x1 - x0)
    height = int(math.ceil((y1 + 0.1) * scale))

    def tr(p: complex) -> str:
        return f"{(p.real - x0) * scale:.2f},{(y1 - p.imag) * scale:.2f}"

    palette = ["#cfe2f3", "#f4cccc", "#d9ead3", "#fff2cc", "#d9d2e9", "#fce5cd"]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="0" y1="{y1 * scale:.2f}" x2="{width}" y2="{y1 * scale:.2f}" stroke="#888"/>',
    ]
    for k, (tile, pts) in enumerate(polys):
        colour = palette[k % len(palette)]
        path = " ".join(tr(p) for p in pts)
        out.append(f'<polygon points="{path}" fill="{colour}" stroke="#333" stroke-width="1"/>')
        cx = sum(p.real for p in pts) / len(pts)
        cy = sum(p.imag for p in pts) / len(pts)
        out.append(
            f'<text x="{(cx - x0) * scale:.2f}" y="{(y1 - cy) * scale:.2f}" font-size="14" '
            f'text-anchor="middle">{tile.word}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = [
    "CORNERS",
    "FundamentalDomain",
    "INFINITY",
    "RHO",
    "RHO2",
    "S_MAT",
    "T_MAT",
    "SidePairing",
    "Tile",
    "fundamental_domain",
    "mobius",
    "render_svg",
]
