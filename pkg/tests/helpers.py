"""Shared factories and independent oracles for the test suite.

The oracles re-derive expected values straight from definitions (scans over
the full open family, brute-force permutation searches) so the fast
implementations are checked against something that cannot share their bugs.
"""

from __future__ import annotations

import itertools

from settop import Space
from settop.bitsets import complement, full_mask, is_subset, iter_points, mask_of
from settop.homeo import image


def sierpinski() -> Space:
    return Space.from_opens(2, [0b00, 0b10, 0b11])


def discrete2() -> Space:
    return Space.from_opens(2, [0b00, 0b01, 0b10, 0b11])


def indiscrete2() -> Space:
    return Space.from_opens(2, [0b00, 0b11])


def pseudocircle() -> Space:
    # opens: -, {0}, {1}, {0,1}, {0,1,2}, {0,1,3}, X
    return Space.from_opens(4, [0b0000, 0b0001, 0b0010, 0b0011, 0b0111, 0b1011, 0b1111])


def discrete(n: int) -> Space:
    return Space.from_opens(n, range(1 << n))


def indiscrete(n: int) -> Space:
    return Space.from_opens(n, [0, full_mask(n)])


# ----------------------------------------------------------------------
# oracles

def interior_oracle(space: Space, mask: int) -> int:
    out = 0
    for o in space.opens:
        if is_subset(o, mask):
            out |= o
    return out


def closure_oracle(space: Space, mask: int) -> int:
    full = space.full
    best = full
    for o in space.opens:
        c = full ^ o
        if is_subset(mask, c) and is_subset(c, best):
            best = c
    return best


def is_connected_oracle(space: Space, mask: int) -> bool:
    """No proper nonempty clopen subset of the subspace on mask."""
    sub = space.subspace(mask)
    open_set = set(sub.opens)
    full = sub.full
    for o in sub.opens:
        if o not in (0, full) and (full ^ o) in open_set:
            return False
    return True


def components_oracle(space: Space, mask: int) -> set[int]:
    """Maximal connected subsets of mask, found by brute enumeration."""
    pts = list(iter_points(mask))
    connected = []
    for r in range(1, len(pts) + 1):
        for combo in itertools.combinations(pts, r):
            sub = mask_of(combo)
            if is_connected_oracle(space, sub):
                connected.append(sub)
    maximal = {
        c
        for c in connected
        if not any(c != d and is_subset(c, d) for d in connected)
    }
    return maximal


def zero_sets_oracle(space: Space) -> set[int]:
    """Zero sets of continuous maps: enumerate all maps into a two-point
    discrete codomain; a map with finite image is continuous into the reals
    iff it is continuous into its (discrete) image."""
    n = space.n
    out = set()
    for bits in range(1 << n):
        # f(x) = 1 if bit x set else 0; zero set = complement of bits
        pre1 = bits
        pre0 = complement(bits, n)
        if space.is_open(pre0) and space.is_open(pre1):
            out.add(pre0)
    return out


def homeos_oracle(space: Space) -> list[tuple[int, ...]]:
    """Permutations with images AND preimages of every open open."""
    open_set = set(space.opens)
    out = []
    for p in itertools.permutations(range(space.n)):
        inv = tuple(sorted(range(space.n), key=lambda x: p[x]))
        if all(
            image(p, o) in open_set and image(inv, o) in open_set
            for o in space.opens
        ):
            out.append(p)
    return out


def homeomorphic_oracle(s1: Space, s2: Space) -> bool:
    if s1.n != s2.n:
        return False
    target = set(s2.opens)
    for p in itertools.permutations(range(s1.n)):
        if {image(p, o) for o in s1.opens} == target:
            return True
    return False
