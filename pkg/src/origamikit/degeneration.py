"""Stable curves at the cusps of an origami curve.

Pinching the core curve of every cylinder in one direction degenerates the
surface to a stable curve. Its components are found combinatorially on the
quarter-cell complex: each square is cut into 2x2 quarter cells, the core
curves are drawn along quarter-cell boundaries, and the adjacencies crossing
them are removed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

import networkx as nx

from .origami import Cylinder, Direction, Origami, cylinders, genus
from .perm import Permutation

MAX_GRAPH_VERTICES = 12


@dataclass(frozen=True)
class DualGraph:
    """Vertices labelled by genus; edges are unordered pairs, loops allowed."""

    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(g < 0 for g in self.genera):
            raise ValueError("genus labels must be nonnegative")
        n = len(self.genera)
        norm = []
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {(a, b)} out of range")
            norm.append((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def n_loops(self) -> int:
        return sum(1 for a, b in self.edges if a == b)

    def n_components(self) -> int:
        return nx.number_connected_components(self.to_networkx()) if self.genera else 0

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        for k, gen in enumerate(self.genera):
            g.add_node(k, genus=gen)
        g.add_edges_from(self.edges)
        return g

    def to_json(self) -> dict:
        return {"genera": list(self.genera), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> DualGraph:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["genera"]), tuple(tuple(e) for e in data["edges"]))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for k, g in enumerate(self.genera):
            lines.append(f'  v{k} [label="{g}"];')
        for a, b in self.edges:
            lines.append(f"  v{a} -- v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def arithmetic_genus(g: DualGraph) -> int:
    """Sum of component genera plus the first Betti number of the graph."""
    if not g.genera or g.n_components() != 1:
        raise ValueError("arithmetic genus needs a connected dual graph")
    return sum(g.genera) + len(g.edges) - len(g.genera) + 1


def graphs_isomorphic(g1: DualGraph, g2: DualGraph) -> bool:
    if max(len(g1.genera), len(g2.genera)) > MAX_GRAPH_VERTICES:
        raise ValueError(f"graphs with more than {MAX_GRAPH_VERTICES} vertices are not supported")
    if sorted(g1.genera) != sorted(g2.genera) or len(g1.edges) != len(g2.edges):
        return False
    return nx.is_isomorphic(
        g1.to_networkx(),
        g2.to_networkx(),
        node_match=lambda a, b: a["genus"] == b["genus"],
    )


# --- the quarter-cell complex -------------------------------------------

# A cell is (square, qx, qy) with qx, qy in {0, 1}; corners are named by
# their offsets (dx, dy) in {0, 1}^2 inside the cell.

class QuarterComplex:
    """The 4d quarter cells of an origami with a set of cut adjacencies."""

    def __init__(self, h: Permutation, v: Permutation, cuts: frozenset = frozenset()) -> None:
        self.h = h
        self.v = v
        self.d = h.degree
        self.cuts = cuts
        self.cells = [(x, qx, qy) for x in range(self.d) for qx in (0, 1) for qy in (0, 1)]

    def right(self, cell):
        x, qx, qy = cell
        return (x, 1, qy) if qx == 0 else (self.h(x), 0, qy)

    def up(self, cell):
        x, qx, qy = cell
        return (x, qx, 1) if qy == 0 else (self.v(x), qx, 0)

    def adjacencies(self):
        """Uncut shared edges as ``(kind, cell, neighbour)``."""
        for cell in self.cells:
            for kind, nb in (("r", self.right(cell)), ("u", self.up(cell))):
                if (kind, cell) not in self.cuts:
                    yield kind, cell, nb

    def components(self) -> list[list[tuple]]:
        g = nx.Graph()
        g.add_nodes_from(self.cells)
        g.add_edges_from((a, b) for _, a, b in self.adjacencies())
        comps = [sorted(c) for c in nx.connected_components(g)]
        comps.sort()
        return comps

    def euler_characteristics(self) -> dict[int, int]:
        """``V - E + F`` for each component of the cut complex (keyed by index)."""
        comps = self.components()
        comp_of = {c: k for k, comp in enumerate(comps) for c in comp}
        parent: dict = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        glued_edges = 0
        for kind, a, b in self.adjacencies():
            glued_edges += 1
            if kind == "r":
                union((a, (1, 0)), (b, (0, 0)))
                union((a, (1, 1)), (b, (0, 1)))
            else:
                union((a, (0, 1)), (b, (0, 0)))
                union((a, (1, 1)), (b, (1, 0)))
        chi = {k: 0 for k in range(len(comps))}
        vertex_roots = {}
        for cell in self.cells:
            for corner in product((0, 1), repeat=2):
                vertex_roots[find((cell, corner))] = comp_of[cell]
        for k in vertex_roots.values():
            chi[k] += 1
        # every cell has four sides; a glued side is shared by two cells
        for cell in self.cells:
            chi[comp_of[cell]] += 1 - 4
        for kind, a, b in self.adjacencies():
            chi[comp_of[a]] += 1
        return chi


def _core_cuts(cyl_rows: tuple[tuple[int, ...], ...]) -> set:
    """Vertical adjacencies crossed by the core curve of a horizontal cylinder."""
    height = len(cyl_rows)
    cuts = set()
    if height % 2:
        row = cyl_rows[height // 2]
        for x in row:
            for qx in (0, 1):
                cuts.add(("u", (x, qx, 0)))
    else:
        row = cyl_rows[height // 2 - 1]
        for x in row:
            for qx in (0, 1):
                cuts.add(("u", (x, qx, 1)))
    return cuts


@dataclass(frozen=True)
class StableCurve:
    graph: DualGraph
    cylinders: tuple[Cylinder, ...]
    component_euler: tuple[int, ...]
    boundary_counts: tuple[int, ...]


def stable_curve_data(o: Origami, direction: Direction = "h") -> StableCurve:
    if direction == "h":
        h, v = o.h, o.v
    elif direction == "v":
        h, v = o.v, o.h
    else:
        raise ValueError(f"direction must be 'h' or 'v', got {direction!r}")
    cyls = cylinders(o, direction)
    cuts: set = set()
    for c in cyls:
        cuts |= _core_cuts(c.rows)
    qc = QuarterComplex(h, v, frozenset(cuts))
    comps = qc.components()
    comp_of = {c: k for k, comp in enumerate(comps) for c in comp}
    chi = qc.euler_characteristics()
    boundary = [0] * len(comps)
    edges = []
    for c in cyls:
        one_cut = next(iter(_core_cuts(c.rows)))
        _, below_cell = one_cut
        above_cell = qc.up(below_cell)
        lo, hi = comp_of[below_cell], comp_of[above_cell]
        boundary[lo] += 1
        boundary[hi] += 1
        edges.append((lo, hi))
    genera = []
    for k in range(len(comps)):
        twice = 2 - chi[k] - boundary[k]
        if twice % 2 or twice < 0:
            raise ArithmeticError(f"component {k}: chi={chi[k]}, b={boundary[k]} is not a surface")
        genera.append(twice // 2)
    return StableCurve(
        DualGraph(tuple(genera), tuple(edges)),
        tuple(cyls),
        tuple(chi[k] for k in range(len(comps))),
        tuple(boundary),
    )


def stable_curve(o: Origami, direction: Direction = "h") -> DualGraph:
    """Dual graph of the stable curve obtained by pinching all core curves."""
    return stable_curve_data(o, direction).graph


def cusp_boundary_points(o: Origami, result=None) -> list[tuple[object, DualGraph]]:
    """Horizontal stable curve at each cusp, deduplicated up to isomorphism.

    Returns ``(cusp, graph)`` pairs for the cusps giving pairwise
    non-isomorphic graphs, in cusp order.
    """
    from .veech import apply_word, veech_group

    if result is None:
        result = veech_group(o)
    out: list[tuple[object, DualGraph]] = []
    for cusp in result.cusps:
        g = stable_curve(apply_word(cusp.representative, o), "h")
        if not any(graphs_isomorphic(g, seen) for _, seen in out):
            out.append((cusp, g))
    return out


def check_genus_preserved(o: Origami, direction: Direction) -> bool:
    return arithmetic_genus(stable_curve(o, direction)) == genus(o)
