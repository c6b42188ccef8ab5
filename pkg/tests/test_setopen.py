"""Brackets, set-open topology constructions, and topology comparison."""

import pytest

from helpers import discrete2, indiscrete2, pseudocircle, sierpinski
from settop import (
    GroupTopology,
    Space,
    SubsetFamily,
    all_nonempty_opens,
    bracket,
    compare_topologies,
    enumerate_homeomorphisms,
    refines,
    set_open_topology,
)
from settop.bitsets import full_mask, is_subset, points
from settop.generate import close_under_finite_unions, enumerate_topologies
from settop.homeo import image


def group_and(space):
    return enumerate_homeomorphisms(space)


def test_bracket_examples():
    d2 = discrete2()
    h = group_and(d2)
    assert points(bracket(d2, h, 0b01, 0b10)) == (1,)  # only the swap
    assert bracket(d2, h, 0b01, d2.full) == full_mask(h.order)
    assert bracket(d2, h, 0, 0b01) == full_mask(h.order)


def test_bracket_monotonicity_exhaustive_small():
    for s in enumerate_topologies(3):
        h = group_and(s)
        subsets = range(1 << s.n)
        for u in subsets:
            for v in subsets:
                b = bracket(s, h, u, v)
                assert is_subset(bracket(s, h, u | v, v), b)  # larger u shrinks
                assert is_subset(b, bracket(s, h, u, v | u))  # larger v grows


def test_set_open_examples():
    d2 = discrete2()
    hd = group_and(d2)
    t = set_open_topology(d2, hd, "b_open", all_nonempty_opens(d2))
    assert t.space.opens == (0b00, 0b01, 0b10, 0b11)
    i2 = indiscrete2()
    hi = group_and(i2)
    t2 = set_open_topology(i2, hi, "b_open", SubsetFamily.of(2, [i2.full]))
    assert t2.space.opens == (0, full_mask(hi.order))
    c4 = pseudocircle()
    hc = group_and(c4)
    t3 = set_open_topology(c4, hc, "zero_cozero")
    assert t3.space.opens == (0, full_mask(hc.order))


def test_family_mode_requires_open_members():
    s2 = sierpinski()
    h = group_and(s2)
    with pytest.raises(ValueError, match="not open"):
        set_open_topology(s2, h, "b_open", SubsetFamily.of(2, [0b01]))
    with pytest.raises(ValueError, match="requires a family"):
        set_open_topology(s2, h, "b_open")
    with pytest.raises(ValueError, match="does not take"):
        set_open_topology(s2, h, "compact_open", all_nonempty_opens(s2))
    with pytest.raises(ValueError, match="unknown mode"):
        set_open_topology(s2, h, "pointwise")


def test_compare_examples():
    d2 = discrete2()
    hd = group_and(d2)
    t_b = set_open_topology(d2, hd, "b_open", all_nonempty_opens(d2))
    t_c = set_open_topology(d2, hd, "compact_open")
    assert compare_topologies(t_b, t_c) == "equal"
    c4 = pseudocircle()
    hc = group_and(c4)
    t_co = set_open_topology(c4, hc, "compact_open")
    t_zc = set_open_topology(c4, hc, "zero_cozero")
    assert compare_topologies(t_co, t_zc) == "finer"
    assert compare_topologies(t_zc, t_co) == "coarser"
    # synthetic incomparable pair over the two-element group
    left = GroupTopology(hd, Space.from_min_opens(2, (0b01, 0b11)), "left")
    right = GroupTopology(hd, Space.from_min_opens(2, (0b11, 0b10)), "right")
    assert compare_topologies(left, right) == "incomparable"


def test_compare_rejects_mismatched_groups():
    d2, s2 = discrete2(), sierpinski()
    t1 = set_open_topology(d2, group_and(d2), "compact_open")
    t2 = set_open_topology(s2, group_and(s2), "compact_open")
    with pytest.raises(ValueError, match="mismatched"):
        compare_topologies(t1, t2)


def naive_rows_from_subbase(order, subbase_masks):
    full = full_mask(order)
    rows = []
    for g in range(order):
        m = full
        for s in subbase_masks:
            if s >> g & 1:
                m &= s
        rows.append(m)
    return tuple(rows)


def naive_set_open_rows(space, group, mode, family=None):
    """Oracle: materialize the whole subbase dictated by the mode."""
    if mode == "b_open":
        u_sets = list(family.members)
        v_sets = space.opens
    elif mode == "closure_b":
        u_sets = sorted({space.closure(m) for m in family.members})
        v_sets = space.opens
    elif mode == "compact_open":
        u_sets = list(range(1 << space.n))
        v_sets = space.opens
    elif mode == "closed_open":
        u_sets = space.closed_sets()
        v_sets = space.opens
    elif mode == "zero_cozero":
        u_sets = space.zero_sets()
        v_sets = space.cozero_sets()
    else:
        u_sets = space.regular_opens()
        v_sets = space.opens
    subbase = {bracket(space, group, u, v) for u in u_sets for v in v_sets}
    return naive_rows_from_subbase(group.order, subbase)


@pytest.mark.parametrize(
    "mode", ["b_open", "closure_b", "compact_open", "closed_open", "zero_cozero", "regular_open"]
)
def test_construction_matches_naive_subbase(mode):
    for s in enumerate_topologies(3):
        h = group_and(s)
        fam = all_nonempty_opens(s) if mode in ("b_open", "closure_b") else None
        t = set_open_topology(s, h, mode, fam)
        assert t.space.min_opens == naive_set_open_rows(s, h, mode, fam)


def test_graph_subbase_equivalence():
    # brackets [U, h(U)] alone generate the same topology
    for s in enumerate_topologies(3):
        h = group_and(s)
        fam = all_nonempty_opens(s)
        t = set_open_topology(s, h, "b_open", fam)
        graph_subbase = {
            bracket(s, h, u, image(p, u)) for u in fam.members for p in h.elements
        }
        assert t.space.min_opens == naive_rows_from_subbase(h.order, graph_subbase)


def test_family_monotonicity_and_union_stability():
    for s in enumerate_topologies(3):
        h = group_and(s)
        nonempty = [o for o in s.opens if o]
        fam_all = SubsetFamily.of(s.n, nonempty)
        t_all = set_open_topology(s, h, "b_open", fam_all)
        for k in range(1, len(nonempty) + 1):
            fam = SubsetFamily.of(s.n, nonempty[:k])
            t = set_open_topology(s, h, "b_open", fam)
            assert refines(t_all, t)
            closed = SubsetFamily.of(s.n, close_under_finite_unions(fam.members))
            for mode in ("b_open", "closure_b"):
                a = set_open_topology(s, h, mode, fam)
                b = set_open_topology(s, h, mode, closed)
                assert a.space == b.space


def test_compact_open_refines_every_b_open():
    for s in enumerate_topologies(3):
        h = group_and(s)
        t_c = set_open_topology(s, h, "compact_open")
        fam = all_nonempty_opens(s)
        t_b = set_open_topology(s, h, "b_open", fam)
        assert refines(t_c, t_b)
        assert refines(t_b, t_c)  # finite spaces: the two coincide for B = all opens


def test_provenance_strings():
    d2 = discrete2()
    h = group_and(d2)
    assert set_open_topology(d2, h, "compact_open").provenance == "compact_open"
    t = set_open_topology(d2, h, "b_open", all_nonempty_opens(d2))
    assert t.provenance.startswith("b_open B=[")
