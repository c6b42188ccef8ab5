"""Homeomorphism groups: enumeration, tables, orbits, stabilizers."""

import itertools

import pytest

from helpers import (
    discrete,
    discrete2,
    homeos_oracle,
    indiscrete2,
    pseudocircle,
    sierpinski,
)
from settop import enumerate_homeomorphisms, is_homogeneous, orbits_of_opens, stabilizer
from settop.bitsets import mask_of
from settop.generate import enumerate_topologies
from settop.homeo import compose, identity, image, inverse


def test_group_examples():
    assert enumerate_homeomorphisms(sierpinski()).order == 1
    d2 = enumerate_homeomorphisms(discrete2())
    assert d2.elements == ((0, 1), (1, 0))
    c4 = enumerate_homeomorphisms(pseudocircle())
    assert c4.elements == ((0, 1, 2, 3), (0, 1, 3, 2), (1, 0, 2, 3), (1, 0, 3, 2))


def test_group_matches_two_sided_oracle():
    # checking images only is enough; the oracle also checks preimages
    for n in range(4):
        for s in enumerate_topologies(n):
            got = enumerate_homeomorphisms(s)
            assert list(got.elements) == homeos_oracle(s)


def test_tables_are_a_group():
    for s in (discrete2(), pseudocircle(), discrete(3)):
        g = enumerate_homeomorphisms(s)
        table = g.compose_table
        e = g.identity_index
        order = g.order
        for i in range(order):
            assert table[e][i] == i and table[i][e] == i
            assert table[i][g.inverse_table[i]] == e
            assert table[g.inverse_table[i]][i] == e
            for j in range(order):
                for k in range(order):
                    assert table[table[i][j]][k] == table[i][table[j][k]]


def test_perm_helpers():
    p = (1, 2, 0)
    assert compose(p, inverse(p)) == identity(3)
    assert image(p, 0b011) == 0b110
    assert inverse(inverse(p)) == p


def test_group_order_is_relabeling_invariant():
    for s in enumerate_topologies(3):
        base = enumerate_homeomorphisms(s).order
        for perm in itertools.permutations(range(s.n)):
            assert enumerate_homeomorphisms(s.relabel(perm)).order == base


def test_homeos_preserve_structure():
    for n in range(5):
        for s in enumerate_topologies(n, max_n=4):
            g = enumerate_homeomorphisms(s)
            for p in g.elements:
                for a in range(1 << s.n):
                    assert image(p, s.interior(a)) == s.interior(image(p, a))
                    assert image(p, s.closure(a)) == s.closure(image(p, a))
                    assert s.is_regular_open(a) == s.is_regular_open(image(p, a))
                    assert s.is_connected(a) == s.is_connected(image(p, a))


def test_orbit_examples():
    s2 = sierpinski()
    assert orbits_of_opens(s2, enumerate_homeomorphisms(s2)) == ((0,), (0b10,), (0b11,))
    d2 = discrete2()
    assert orbits_of_opens(d2, enumerate_homeomorphisms(d2)) == (
        (0,),
        (0b01, 0b10),
        (0b11,),
    )
    c4 = pseudocircle()
    assert orbits_of_opens(c4, enumerate_homeomorphisms(c4)) == (
        (0,),
        (0b0001, 0b0010),
        (0b0011,),
        (0b0111, 0b1011),
        (0b1111,),
    )


def test_stabilizer_examples():
    c4 = enumerate_homeomorphisms(pseudocircle())
    st = stabilizer(c4, 0)
    assert st.elements == ((0, 1, 2, 3), (0, 1, 3, 2))
    d2 = enumerate_homeomorphisms(discrete2())
    assert stabilizer(d2, 0).elements == ((0, 1),)
    for a in range(4):
        assert identity(4) in stabilizer(c4, a).elements


def test_stabilizer_is_subgroup():
    g = enumerate_homeomorphisms(discrete(3))
    st = stabilizer(g, 1)
    for p in st.elements:
        for q in st.elements:
            assert compose(p, q) in st.elements
        assert inverse(p) in st.elements


def test_homogeneous_examples():
    assert is_homogeneous(discrete2(), enumerate_homeomorphisms(discrete2()))
    assert not is_homogeneous(pseudocircle(), enumerate_homeomorphisms(pseudocircle()))
    assert is_homogeneous(indiscrete2(), enumerate_homeomorphisms(indiscrete2()))


def test_point_bound_enforced():
    with pytest.raises(ValueError, match="bound"):
        enumerate_homeomorphisms(discrete(3), max_n=2)
