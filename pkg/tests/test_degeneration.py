import json
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from origamikit.degeneration import (
    DualGraph,
    QuarterComplex,
    arithmetic_genus,
    cusp_boundary_points,
    graphs_isomorphic,
    stable_curve,
    stable_curve_data,
)
from origamikit.origami import catalog, cylinders, genus, get_origami

from conftest import origamis

TWO_LOOPS = DualGraph((0,), ((0, 0), (0, 0)))
THREE_EDGES = DualGraph((0, 0), ((0, 1), (0, 1), (0, 1)))


def test_S_horizontal(S):
    g = stable_curve(S, "h")
    assert g == TWO_LOOPS
    assert arithmetic_genus(g) == 2


def test_S_vertical(S):
    g = stable_curve(S, "v")
    assert graphs_isomorphic(g, THREE_EDGES)
    assert arithmetic_genus(g) == 2


def test_torus():
    g = stable_curve(get_origami("torus"), "h")
    assert g == DualGraph((0,), ((0, 0),))
    assert arithmetic_genus(g) == 1


def test_S_boundary_points(S):
    pts = cusp_boundary_points(S)
    assert len(pts) == 2
    (c0, g0), (c1, g1) = pts
    assert str(c0.representative) == "I" and g0 == TWO_LOOPS
    assert str(c1.representative) == "s" and graphs_isomorphic(g1, THREE_EDGES)
    assert not graphs_isomorphic(g0, g1)


def test_isomorphism_basics():
    assert graphs_isomorphic(TWO_LOOPS, TWO_LOOPS)
    assert not graphs_isomorphic(TWO_LOOPS, THREE_EDGES)
    assert not graphs_isomorphic(DualGraph((0, 1), ((0, 1),)), DualGraph((0, 0), ((0, 1),)))
    big = DualGraph(tuple([0] * 13), tuple((k, k + 1) for k in range(12)))
    with pytest.raises(ValueError):
        graphs_isomorphic(big, big)


def _brute_iso(g1, g2):
    if len(g1.genera) != len(g2.genera):
        return False
    e2 = Counter(g2.edges)
    for p in permutations(range(len(g1.genera))):
        if any(g1.genera[i] != g2.genera[p[i]] for i in range(len(p))):
            continue
        mapped = Counter(tuple(sorted((p[a], p[b]))) for a, b in g1.edges)
        if mapped == e2:
            return True
    return False


@st.composite
def dual_graphs(draw):
    n = draw(st.integers(1, 4))
    genera = tuple(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    edges = tuple(draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=5)))
    return DualGraph(genera, edges)


@given(dual_graphs(), dual_graphs())
def test_isomorphism_matches_brute_force(g1, g2):
    assert graphs_isomorphic(g1, g2) == _brute_iso(g1, g2)


@given(dual_graphs(), st.randoms(use_true_random=False))
def test_relabelled_graph_is_isomorphic(g, rnd):
    p = list(range(len(g.genera)))
    rnd.shuffle(p)
    inv = {p[i]: i for i in p}
    h = DualGraph(tuple(g.genera[inv[j]] for j in range(len(p))), tuple((p[a], p[b]) for a, b in g.edges))
    assert graphs_isomorphic(g, h)


def test_arithmetic_genus_needs_connected():
    with pytest.raises(ValueError):
        arithmetic_genus(DualGraph((0, 0), ()))


def test_serialization(S):
    g = stable_curve(S, "v")
    assert DualGraph.from_json(json.dumps(g.to_json())) == g
    dot = g.to_dot()
    assert dot.startswith("graph G {") and dot.count("--") == 3


@given(origamis())
def test_uncut_complex_has_surface_euler_characteristic(o):
    chi = QuarterComplex(o.h, o.v).euler_characteristics()
    assert list(chi.values()) == [2 - 2 * genus(o)]


@given(origamis(), st.sampled_from("hv"))
def test_pinching_preserves_genus_and_euler(o, direction):
    data = stable_curve_data(o, direction)
    assert sum(data.component_euler) == 2 - 2 * genus(o)
    assert arithmetic_genus(data.graph) == genus(o)
    assert len(data.graph.edges) == len(cylinders(o, direction))


@pytest.mark.parametrize("name", sorted(catalog()))
@pytest.mark.parametrize("direction", ["h", "v"])
def test_catalog_pinching(name, direction):
    o = catalog()[name]
    data = stable_curve_data(o, direction)
    assert sum(data.component_euler) == 2 - 2 * genus(o)
    assert arithmetic_genus(data.graph) == genus(o)
