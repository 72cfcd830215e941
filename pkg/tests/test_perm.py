from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from origamikit.algebra import ParseError
from origamikit.perm import (
    Permutation,
    anti_centralizer_pair,
    centralizer_pair,
    commutator,
    conjugate,
    inverse,
    is_transitive,
    parse_cycles,
)

from conftest import origamis

perms = st.integers(1, 7).flatmap(lambda d: st.tuples(*[st.permutations(range(d))] * 3))


def test_composition_is_right_to_left():
    p = Permutation.parse("(1 2)", 3)
    q = Permutation.parse("(2 3)", 3)
    # q first: 2 -> 3 -> 3, then 3 -> 2 -> 1
    assert (p * q)(1) == 2
    assert (p * q)(2) == 0


def test_cycle_notation():
    p = Permutation.parse("(1 2 3)(4 5 6)")
    assert str(p) == "(1 2 3)(4 5 6)"
    assert p.cycles() == [(1, 2, 3), (4, 5, 6)]
    assert str(Permutation.identity(4)) == "()"
    assert Permutation.parse("(1,3)", 4).fixed_points() == [1, 3]


@given(perms)
def test_group_axioms(t):
    p, q, r = (Permutation(x) for x in t)
    assert (p * q) * r == p * (q * r)
    assert p * inverse(p) == Permutation.identity(p.degree)
    assert p ** 3 == p * p * p
    assert p ** -2 == inverse(p * p)
    assert Permutation.parse(str(p), p.degree) == p


@given(perms)
def test_conjugate_relabels_cycles(t):
    p, by, _ = (Permutation(x) for x in t)
    c = conjugate(p, by)
    expect = sorted(sorted(len(x) for x in p.cycles()))
    assert sorted(len(x) for x in c.cycles()) == expect
    for i in range(p.degree):
        assert c(by(i)) == by(p(i))


def test_commutator_of_commuting_pair_is_trivial():
    h = Permutation.parse("(1 2)(3 4)")
    v = Permutation.parse("(1 3)(2 4)")
    assert commutator(h, v).is_identity()


def _brute(h, v, target_h, target_v):
    out = []
    for img in permutations(range(h.degree)):
        pi = Permutation(img)
        if pi * h == target_h * pi and pi * v == target_v * pi:
            out.append(pi)
    return sorted(out)


@given(origamis(max_d=6))
def test_centralizer_matches_brute_force(o):
    assert centralizer_pair(o.h, o.v) == _brute(o.h, o.v, o.h, o.v)
    assert anti_centralizer_pair(o.h, o.v) == _brute(o.h, o.v, inverse(o.h), inverse(o.v))


def test_centralizer_needs_transitivity():
    h = Permutation.parse("(1 2)", 4)
    with pytest.raises(ValueError):
        centralizer_pair(h, Permutation.identity(4))
    assert not is_transitive([h, Permutation.identity(4)])


@pytest.mark.parametrize("text, column", [("(1 2", 1), ("(1 2)x", 6), ("(1 1)", 2), ("(1 a)", 2)])
def test_parse_errors(text, column):
    with pytest.raises(ParseError) as exc:
        parse_cycles(text)
    assert exc.value.column == column


def test_bad_cycles():
    with pytest.raises(ValueError):
        Permutation.from_cycles([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        Permutation.from_cycles([(1, 5)], 3)
