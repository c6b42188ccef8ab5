"""Finite topological spaces over bitmask point sets.

A space on n points is determined by the minimal open set of every point:
``min_opens[x]`` is the intersection of all opens containing x, itself open
in a finite space.  A subset P is then open iff ``min_opens[x] <= P`` for all
x in P, and the full open family is exactly the family of unions of minimal
opens.  Spaces built from an explicit open family keep that family; spaces
built from minimal opens (products, generated topologies on group indices)
materialize their family lazily and only under a size cap, because e.g. the
discrete topology on a 24-element homeomorphism group has 2**24 opens.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .bitsets import (
    complement,
    full_mask,
    is_subset,
    iter_points,
    mask_of,
    points,
    render,
)

# Guard for user-constructed spaces (text fixtures, subbases on base spaces).
MAX_SPACE_POINTS = 16
# Guard for products; group-index spaces at n=5 need 120*120 = 14400 points.
MAX_PRODUCT_POINTS = 32768
# Cap on lazily materialized open families.
MAX_OPEN_FAMILY = 1 << 20
# Cap on quotient block counts (quotient opens are found by a 2**k scan).
MAX_QUOTIENT_BLOCKS = 16


class SpaceError(ValueError):
    """Raised when a claimed open family or partition is malformed."""


@dataclass(frozen=True)
class SpaceClassification:
    t0: bool
    t1: bool
    regular: bool
    semiregular: bool
    zero_dimensional: bool


class Space:
    """Immutable finite topological space.

    Use :meth:`from_opens` or :meth:`from_min_opens` rather than the raw
    constructor; the factories validate their input.
    """

    def __init__(self, n: int, min_opens, opens=None):
        self.n = n
        self.min_opens = tuple(min_opens)
        self._opens = tuple(opens) if opens is not None else None
        self._cache: dict = {}

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_opens(cls, n: int, opens, max_points: int | None = None) -> "Space":
        """Build a space from an explicit open family, checking invariants."""
        limit = MAX_SPACE_POINTS if max_points is None else max_points
        if n < 0 or n > limit:
            raise SpaceError(f"point count {n} outside [0, {limit}]")
        full = full_mask(n)
        fam = sorted(set(opens))
        for m in fam:
            if m & ~full:
                raise SpaceError(f"open set {render(m)} leaves the {n}-point ground set")
        have = set(fam)
        if 0 not in have:
            raise SpaceError("opens must contain the empty set")
        if full not in have:
            raise SpaceError("opens must contain the full set")
        for a in fam:
            for b in fam:
                if a >= b:
                    continue
                if a | b not in have:
                    raise SpaceError(
                        f"opens not closed under union: {render(a)} | {render(b)}"
                    )
                if a & b not in have:
                    raise SpaceError(
                        f"opens not closed under intersection: {render(a)} & {render(b)}"
                    )
        rows = []
        for x in range(n):
            m = full
            for o in fam:
                if o >> x & 1:
                    m &= o
            rows.append(m)
        return cls(n, rows, fam)

    @classmethod
    def from_min_opens(cls, n: int, rows) -> "Space":
        """Build a space from per-point minimal opens (open family stays lazy)."""
        rows = tuple(rows)
        if len(rows) != n:
            raise SpaceError(f"expected {n} minimal opens, got {len(rows)}")
        full = full_mask(n)
        for x, m in enumerate(rows):
            if m & ~full:
                raise SpaceError(f"minimal open of {x} leaves the ground set")
            if not m >> x & 1:
                raise SpaceError(f"minimal open of {x} does not contain {x}")
        for x in range(n):
            for y in iter_points(rows[x]):
                if rows[y] & ~rows[x]:
                    raise SpaceError(
                        f"minimal opens inconsistent: {y} in min({x}) "
                        f"but min({y}) is not contained in min({x})"
                    )
        return cls(n, rows)

    # ------------------------------------------------------------------
    # basic protocol

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Space)
            and self.n == other.n
            and self.min_opens == other.min_opens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.min_opens))

    def __repr__(self) -> str:
        if self._opens is not None:
            return f"Space(n={self.n}, opens={len(self._opens)})"
        return f"Space(n={self.n}, min_opens={self.min_opens})"

    def __getstate__(self):
        return (self.n, self.min_opens, self._opens)

    def __setstate__(self, state):
        self.n, self.min_opens, self._opens = state
        self._cache = {}

    # ------------------------------------------------------------------
    # open family

    @property
    def opens(self) -> tuple[int, ...]:
        """The full open family, ascending by mask value."""
        if self._opens is None:
            self._opens = self._materialize(MAX_OPEN_FAMILY)
        return self._opens

    def open_count(self) -> int:
        return len(self.opens)

    def _materialize(self, cap: int) -> tuple[int, ...]:
        base = sorted(set(self.min_opens))
        fam = {0}
        frontier = [0]
        while frontier:
            cur = frontier.pop()
            for b in base:
                nxt = cur | b
                if nxt not in fam:
                    if len(fam) >= cap:
                        raise SpaceError(
                            f"open family of {self.n}-point space exceeds cap {cap}"
                        )
                    fam.add(nxt)
                    frontier.append(nxt)
        if self.n == 0:
            fam = {0}
        return tuple(sorted(fam))

    def is_open(self, mask: int) -> bool:
        rows = self.min_opens
        return all(is_subset(rows[x], mask) for x in iter_points(mask))

    def is_closed(self, mask: int) -> bool:
        return self.is_open(complement(mask, self.n))

    def closed_sets(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full ^ o for o in self.opens))

    # ------------------------------------------------------------------
    # point-set operators

    def interior(self, mask: int) -> int:
        """Union of all opens contained in ``mask``."""
        rows = self.min_opens
        out = 0
        for x in iter_points(mask & self.full):
            if is_subset(rows[x], mask):
                out |= 1 << x
        return out

    def closure(self, mask: int) -> int:
        """Smallest closed superset: points whose every neighbourhood meets mask."""
        rows = self.min_opens
        out = 0
        for x in range(self.n):
            if rows[x] & mask:
                out |= 1 << x
        return out

    def open_hull(self, mask: int) -> int:
        """Smallest open superset (finite spaces: opens are closed under
        arbitrary intersection)."""
        rows = self.min_opens
        out = 0
        for x in iter_points(mask):
            out |= rows[x]
        return out

    def is_regular_open(self, mask: int) -> bool:
        mask &= self.full
        return self.interior(self.closure(mask)) == mask

    def regular_opens(self) -> tuple[int, ...]:
        return tuple(o for o in self.opens if self.is_regular_open(o))

    # ------------------------------------------------------------------
    # connectivity

    def _adjacency(self) -> tuple[int, ...]:
        # x ~ y iff one lies in the minimal open of the other; graph
        # components of this relation are exactly the connected components
        # (each graph component is clopen, and crossing edges disconnect
        # any clopen split).
        adj = self._cache.get("adj")
        if adj is None:
            rows = self.min_opens
            cols = [0] * self.n
            for y in range(self.n):
                for x in iter_points(rows[y]):
                    cols[x] |= 1 << y
            adj = tuple(rows[x] | cols[x] for x in range(self.n))
            self._cache["adj"] = adj
        return adj

    def connected_components(self, mask: int) -> tuple[int, ...]:
        """Partition of ``mask`` into the components of the subspace on it,
        ordered by smallest member point.  The empty set has no components.
        """
        mask &= self.full
        adj = self._adjacency()
        out = []
        seen = 0
        for x in iter_points(mask):
            if seen >> x & 1:
                continue
            comp = 1 << x
            while True:
                grow = comp
                for y in iter_points(comp):
                    grow |= adj[y] & mask
                if grow == comp:
                    break
                comp = grow
            out.append(comp)
            seen |= comp
        return tuple(out)

    def is_connected(self, mask: int) -> bool:
        return len(self.connected_components(mask)) <= 1

    # ------------------------------------------------------------------
    # classification

    def is_base(self, members) -> bool:
        """True iff every open is a union of the given open members."""
        for o in self.opens:
            u = 0
            for m in members:
                if is_subset(m, o):
                    u |= m
            if u != o:
                return False
        return True

    def classify(self) -> SpaceClassification:
        cached = self._cache.get("classification")
        if cached is not None:
            return cached
        opens = self.opens
        full = self.full
        n = self.n
        t0 = True
        for x in range(n):
            for y in range(x + 1, n):
                pair = (1 << x) | (1 << y)
                if not any(len(points(o & pair)) == 1 for o in opens):
                    t0 = False
                    break
            if not t0:
                break
        t1 = all(self.closure(1 << x) == 1 << x for x in range(n))
        # saturations: largest open disjoint from each open U
        sat = {}
        for u in opens:
            s = 0
            for o in opens:
                if o & u == 0:
                    s |= o
            sat[u] = s
        regular = True
        for c in self.closed_sets():
            for x in iter_points(full & ~c):
                if not any(u >> x & 1 and is_subset(c, sat[u]) for u in opens):
                    regular = False
                    break
            if not regular:
                break
        semiregular = self.is_base(self.regular_opens())
        clopens = [o for o in opens if (full ^ o) in set(opens)]
        zero_dimensional = self.is_base(clopens)
        result = SpaceClassification(t0, t1, regular, semiregular, zero_dimensional)
        self._cache["classification"] = result
        return result

    # ------------------------------------------------------------------
    # derived spaces

    def subspace(self, mask: int) -> "Space":
        """Trace topology on ``mask``, points relabeled in ascending order."""
        mask &= self.full
        pts = points(mask)
        index = {p: i for i, p in enumerate(pts)}
        rows = []
        for p in pts:
            rows.append(mask_of(index[q] for q in iter_points(self.min_opens[p] & mask)))
        return Space.from_min_opens(len(pts), rows)

    def quotient(self, partition) -> "Space":
        """Quotient by a partition of the points; a block set is open iff its
        preimage union is open.  Blocks are ordered by least member.
        """
        blocks = []
        for block in partition:
            m = block if isinstance(block, int) else mask_of(block)
            if m == 0:
                raise SpaceError("malformed partition: empty block")
            blocks.append(m)
        union = 0
        for m in blocks:
            if union & m:
                raise SpaceError(f"malformed partition: block {render(m)} overlaps")
            union |= m
        if union != self.full:
            raise SpaceError(
                f"malformed partition: points {render(self.full & ~union)} missing"
            )
        blocks.sort(key=lambda m: m & -m)
        k = len(blocks)
        if k > MAX_QUOTIENT_BLOCKS:
            raise SpaceError(f"quotient with {k} blocks exceeds {MAX_QUOTIENT_BLOCKS}")
        q_opens = []
        for t in range(1 << k):
            u = 0
            for i in iter_points(t):
                u |= blocks[i]
            if self.is_open(u):
                q_opens.append(t)
        rows = []
        for b in range(k):
            m = full_mask(k)
            for t in q_opens:
                if t >> b & 1:
                    m &= t
            rows.append(m)
        out = Space.from_min_opens(k, rows)
        out._opens = tuple(sorted(q_opens))
        return out

    def relabel(self, perm) -> "Space":
        """Image space under a point permutation (x goes to perm[x])."""
        rows = [0] * self.n
        for x in range(self.n):
            rows[perm[x]] = mask_of(perm[y] for y in iter_points(self.min_opens[x]))
        out = Space(self.n, rows)
        if self._opens is not None:
            out._opens = tuple(
                sorted(mask_of(perm[y] for y in iter_points(o)) for o in self._opens)
            )
        return out

    # ------------------------------------------------------------------
    # zero sets and bases

    def zero_sets(self) -> tuple[int, ...]:
        """Zero sets of continuous real-valued maps: all unions of connected
        components (a map from a finite space to a T1 codomain is continuous
        iff constant on components)."""
        cached = self._cache.get("zero_sets")
        if cached is not None:
            return cached
        comps = self.connected_components(self.full)
        out = {0}
        for c in comps:
            out |= {z | c for z in out}
        result = tuple(sorted(out))
        self._cache["zero_sets"] = result
        return result

    def cozero_sets(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full ^ z for z in self.zero_sets()))

    def cozero_hull(self, mask: int) -> int:
        """Smallest cozero superset: union of the components meeting mask."""
        out = 0
        for c in self.connected_components(self.full):
            if c & mask:
                out |= c
        return out

    def minimal_base(self) -> tuple[int, ...]:
        """Deduplicated minimal opens, ascending; the coarsest base."""
        return tuple(sorted(set(self.min_opens)))


def product(s1: Space, s2: Space, max_points: int | None = None) -> Space:
    """Product space; point (i, j) gets row-major index i*s2.n + j."""
    limit = MAX_PRODUCT_POINTS if max_points is None else max_points
    n = s1.n * s2.n
    if n > limit:
        raise SpaceError(f"product with {n} points exceeds {limit}")
    n2 = s2.n
    rows = []
    for i in range(s1.n):
        for j in range(s2.n):
            box = 0
            m2 = s2.min_opens[j]
            for x in iter_points(s1.min_opens[i]):
                box |= m2 << (x * n2)
            rows.append(box)
    return Space(n, tuple(rows))


def interior(s: Space, mask: int) -> int:
    return s.interior(mask)


def closure(s: Space, mask: int) -> int:
    return s.closure(mask)


def is_regular_open(s: Space, mask: int) -> bool:
    return s.is_regular_open(mask)
