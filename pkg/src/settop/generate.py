"""Generating and enumerating finite topologies.

Topologies on n labeled points correspond to reflexive transitive "minimal
open" assignments: rows[x] is the minimal open of x, and validity means
y in rows[x] implies rows[y] <= rows[x].  Enumeration does a depth-first
search over such assignments, which is output-sensitive and replaces the
infeasible filter over all 2**(2**n) subset families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce

from .bitsets import full_mask, iter_points, mask_of
from .spaces import Space

DEFAULT_MAX_LABELED = 5
DEFAULT_MAX_UP_TO_ISO = 6


def topology_from_subbase(n: int, members) -> Space:
    """Smallest topology containing every member.

    The minimal open of x in the generated topology is the intersection of
    all members containing x (the empty intersection is the full set); the
    opens are all unions of these.
    """
    full = full_mask(n)
    members = [m & full for m in members]
    rows = []
    for x in range(n):
        m = full
        for s in members:
            if s >> x & 1:
                m &= s
        rows.append(m)
    return Space(n, tuple(rows))


def close_under_finite_unions(members) -> tuple[int, ...]:
    """Minimal superfamily closed under pairwise union."""
    fam = set(members)
    frontier = list(fam)
    while frontier:
        a = frontier.pop()
        for b in list(fam):
            u = a | b
            if u not in fam:
                fam.add(u)
                frontier.append(u)
    return tuple(sorted(fam))


def _labeled_rows(n: int):
    """All valid minimal-open assignments on n labeled points (DFS)."""
    if n == 0:
        yield ()
        return
    rows = [0] * n
    total = 1 << n

    def rec(x: int):
        if x == n:
            yield tuple(rows)
            return
        bit = 1 << x
        for m in range(total):
            if not m & bit:
                continue
            ok = True
            for y in range(x):
                ry = rows[y]
                if m >> y & 1 and ry & ~m:
                    ok = False
                    break
                if ry >> x & 1 and m & ~ry:
                    ok = False
                    break
            if ok:
                rows[x] = m
                yield from rec(x + 1)

    yield from rec(0)


def _relabel_rows(rows: tuple[int, ...], perm) -> tuple[int, ...]:
    out = [0] * len(rows)
    for x, r in enumerate(rows):
        out[perm[x]] = mask_of(perm[y] for y in iter_points(r))
    return tuple(out)


def _row_signatures(rows: tuple[int, ...]) -> list:
    n = len(rows)
    cols = [0] * n
    for y in range(n):
        for x in iter_points(rows[y]):
            cols[x] |= 1 << y
    sig = [(rows[x].bit_count(), cols[x].bit_count()) for x in range(n)]
    for _ in range(2):
        sig = [
            (
                sig[x],
                tuple(sorted(sig[y] for y in iter_points(rows[x]))),
                tuple(sorted(sig[y] for y in iter_points(cols[x]))),
            )
            for x in range(n)
        ]
    return sig


def canonical_rows(rows: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical relabeling of a minimal-open assignment.

    Points are first ordered by an iterated relabeling-invariant signature;
    the remaining freedom (permutations within equal-signature classes) is
    searched exhaustively for the lexicographically least row tuple.  Two
    assignments get equal output iff the spaces are homeomorphic.
    """
    n = len(rows)
    if n <= 1:
        return rows
    sig = _row_signatures(rows)
    classes: dict = {}
    for x in range(n):
        classes.setdefault(sig[x], []).append(x)
    ordered = [classes[s] for s in sorted(classes)]
    starts = []
    pos = 0
    for cl in ordered:
        starts.append(pos)
        pos += len(cl)
    best = None
    for choice in itertools.product(*(itertools.permutations(cl) for cl in ordered)):
        perm = [0] * n
        for cl_idx, arrangement in enumerate(choice):
            base = starts[cl_idx]
            for offset, x in enumerate(arrangement):
                perm[x] = base + offset
        cand = _relabel_rows(rows, perm)
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class CanonicalForm:
    """Least relabeling of a space's open family over all n! permutations."""

    n: int
    opens: tuple[int, ...]


def canonical_form(space: Space) -> CanonicalForm:
    opens = space.opens
    n = space.n
    best = None
    for perm in itertools.permutations(range(n)):
        cand = tuple(sorted(mask_of(perm[y] for y in iter_points(o)) for o in opens))
        if best is None or cand < best:
            best = cand
    return CanonicalForm(n, best)


def are_homeomorphic(s1: Space, s2: Space) -> bool:
    if s1.n != s2.n:
        return False
    return canonical_rows(s1.min_opens) == canonical_rows(s2.min_opens)


def _sort_key(space: Space):
    opens = space.opens
    return (len(opens), opens)


def enumerate_topologies(n: int, up_to_iso: bool = False, max_n: int | None = None):
    """Every topology on n labeled points, or one representative per
    homeomorphism class; ascending by open count then open list."""
    bound = max_n if max_n is not None else (
        DEFAULT_MAX_UP_TO_ISO if up_to_iso else DEFAULT_MAX_LABELED
    )
    if n < 0 or n > bound:
        raise ValueError(f"point count {n} outside [0, {bound}]")
    if up_to_iso:
        keys = {canonical_rows(rows) for rows in _labeled_rows(n)}
        spaces = [Space(n, rows) for rows in keys]
    else:
        spaces = [Space(n, rows) for rows in _labeled_rows(n)]
    spaces.sort(key=_sort_key)
    yield from spaces


@lru_cache(maxsize=16)
def topology_classes(n: int) -> tuple[Space, ...]:
    """Cached homeomorphism-class representatives on exactly n points."""
    return tuple(enumerate_topologies(n, up_to_iso=True))


def brute_force_labeled_count(n: int) -> int:
    """Independent oracle: filter all 2**(2**n) subset families for the
    topology axioms.  Only sensible for n <= 4."""
    subsets = list(range(1 << n))
    full = full_mask(n)
    count = 0
    for fam_bits in range(1 << len(subsets)):
        if not fam_bits & 1 or not fam_bits >> full & 1:
            continue
        fam = [s for s in subsets if fam_bits >> s & 1]
        ok = True
        for i, a in enumerate(fam):
            for b in fam[i + 1 :]:
                if not fam_bits >> (a | b) & 1 or not fam_bits >> (a & b) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count
