import xml.etree.ElementTree as ET
from fractions import Fraction

from hypothesis import given, settings

from origamikit.algebra import QuadElt
from origamikit.domain import INFINITY, RHO, RHO2, fundamental_domain, mobius
from origamikit.origami import catalog, get_origami
from origamikit.veech import S_MAT, T_MAT, is_member, veech_group

from conftest import origamis


def test_corners():
    assert RHO2 == QuadElt(Fraction(-1, 2), Fraction(1, 2), -3)
    assert RHO * RHO - RHO + 1 == 0


def test_mobius():
    assert mobius(S_MAT, INFINITY) == 0
    assert mobius(S_MAT, 0) is INFINITY
    assert mobius(T_MAT, RHO2) == RHO
    assert mobius(S_MAT, RHO) == RHO2


def test_S_domain(S):
    fd = fundamental_domain(veech_group(S), S)
    assert (fd.n_faces, fd.n_edges, fd.n_vertices) == (4, 6, 4)
    assert fd.n_cusp_vertices == 2
    assert fd.genus == 0


def test_torus_domain():
    o = get_origami("torus")
    fd = fundamental_domain(veech_group(o), o)
    assert fd.n_faces == 1
    assert fd.genus == 0
    assert fd.tiles[0].vertices == (RHO2, RHO, INFINITY)


def test_tiles_are_mobius_images(S):
    fd = fundamental_domain(veech_group(S), S)
    for tile in fd.tiles:
        assert tile.vertices == tuple(mobius(tile.matrix, z) for z in (RHO2, RHO, INFINITY))


def test_euler_genus_matches_formula_on_catalog():
    for o in catalog().values():
        r = veech_group(o)
        fd = fundamental_domain(r, o)
        assert fd.genus == r.quotient_genus
        assert fd.n_cusp_vertices == len(r.cusps)


@settings(max_examples=40)
@given(origamis(max_d=5))
def test_euler_genus_matches_formula(o):
    r = veech_group(o)
    fd = fundamental_domain(r, o)
    assert fd.genus == r.quotient_genus
    assert fd.n_faces == r.psl_index


def test_svg_is_well_formed(S):
    svg = fundamental_domain(veech_group(S), S).to_svg()
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert svg.count("<polygon") == 4


def test_pairings_are_members_without_minus_identity():
    # -I is not in this Veech group, so some side pairings need s^2 appended
    o = get_origami("h=(2 3)(4 5); v=(1 2 3 4)")
    r = veech_group(o)
    assert not r.contains_minus_identity
    fd = fundamental_domain(r, o)
    assert fd.pairings
    for p in fd.pairings:
        assert is_member(p.element, o), str(p.element)
    assert fd.genus == r.quotient_genus
