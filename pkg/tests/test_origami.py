import json
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from origamikit.algebra import ParseError
from origamikit.origami import (
    Origami,
    automorphisms,
    canonical_form,
    catalog,
    cylinders,
    format_origami,
    from_canonical,
    genus,
    get_origami,
    origami_from_json,
    parse_origami,
    stratum,
    translations,
    vertex_profile,
)
from origamikit.perm import Permutation, inverse

from conftest import origamis


def test_S_invariants(S):
    assert S.d == 6
    assert genus(S) == 2
    assert stratum(S) == (1, 1)
    assert vertex_profile(S).n_vertices == 4
    assert vertex_profile(S).cone_angles == [2, 2, 1, 1]


def test_S_automorphisms(S):
    assert [str(p) for p in translations(S)] == ["()", "(1 6)(2 4)(3 5)"]
    aut = automorphisms(S)
    assert aut.order == 4
    assert aut.has_involution_minus_identity


def test_torus():
    t = get_origami("torus")
    assert genus(t) == 1 and stratum(t) == ()
    assert vertex_profile(t).n_vertices == 1


def test_L3():
    o = get_origami("L3")
    assert genus(o) == 2 and stratum(o) == (2,)


@given(origamis())
def test_gauss_bonnet(o):
    # zero orders sum to 2g - 2, and Euler characteristic V - 2d + d = 2 - 2g
    assert sum(vertex_profile(o).zero_orders) == 2 * genus(o) - 2
    assert vertex_profile(o).n_vertices - o.d == 2 - 2 * genus(o)


@given(origamis(), st.randoms(use_true_random=False))
def test_canonical_form_is_conjugation_invariant(o, rnd):
    assert canonical_form(o.random_relabel(rnd)) == canonical_form(o)


def _orbit_key(o):
    # brute-force oracle: least encoding over all relabellings
    return min(
        (r.h.images, r.v.images) for r in (o.relabel(Permutation(p)) for p in permutations(range(o.d)))
    )


@given(origamis(max_d=4), origamis(max_d=4))
def test_canonical_form_decides_conjugacy(o1, o2):
    same = o1.d == o2.d and _orbit_key(o1) == _orbit_key(o2)
    assert (canonical_form(o1) == canonical_form(o2)) == same


@given(origamis(max_d=5))
def test_from_canonical_is_conjugate(o):
    assert _orbit_key(from_canonical(canonical_form(o))) == _orbit_key(o)


def test_canonical_form_under_simultaneous_inversion(S):
    inv = Origami(inverse(S.h), inverse(S.v))
    assert canonical_form(inv) == canonical_form(S)


def test_S_cylinders(S):
    hc = cylinders(S, "h")
    assert [(c.width, c.height) for c in hc] == [(3, 1), (3, 1)]
    vc = cylinders(S, "v")
    assert [(c.width, c.height, sorted(c.squares)) for c in vc] == [
        (1, 1, [1]),
        (2, 2, [2, 3, 4, 5]),
        (1, 1, [6]),
    ]


@given(origamis(), st.sampled_from("hv"))
def test_cylinders_tile_the_surface(o, direction):
    cyl = cylinders(o, direction)
    squares = [x for c in cyl for x in c.squares]
    assert sorted(squares) == list(range(1, o.d + 1))
    assert sum(c.width * c.height for c in cyl) == o.d


def test_cylinder_direction_check(S):
    with pytest.raises(ValueError):
        cylinders(S, "x")


@given(origamis())
def test_text_round_trip(o):
    assert parse_origami(format_origami(o)) == o


def test_text_round_trip_keeps_trailing_fixed_squares():
    o = get_origami("cylinder2")
    o2 = Origami(o.h, o.v)
    assert parse_origami(format_origami(o2)) == o2
    three = get_origami("h=(1 2 3); v=(); d=3")
    assert parse_origami(format_origami(three)).d == 3


@given(origamis())
def test_json_round_trip(o):
    assert origami_from_json(json.dumps(o.to_json())) == o


def test_json_schema_tag():
    with pytest.raises(ValueError):
        origami_from_json({"schema": "other/9", "h": "()", "v": "()", "d": 1})


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("h=(1 2; v=()", 1, 3),
        ("h=(1 2); v=(); w=1", 1, 16),
        ("S;\nh=(1 2 3)(4 5 6);\nv=(2 4)(3 5;", 3, 8),
        ("h=(1 2)", 1, 8),
    ],
)
def test_parse_errors_report_line_and_column(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_origami(text)
    assert (exc.value.line, exc.value.column) == (line, column)


def test_disconnected_is_rejected():
    with pytest.raises(ValueError, match="transitive"):
        get_origami("h=(1 2)(3 4); v=()")


def test_catalog_names():
    assert set(catalog()) >= {"S", "torus"}
