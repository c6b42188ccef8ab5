"""Homeomorphism groups of finite spaces.

A homeomorphism is a point permutation mapping the open family onto itself.
By finiteness it is enough to check that the image of every open is open:
the map O -> h(O) is then an injection of a finite family into itself, hence
a bijection, so preimages of opens are open as well.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .bitsets import iter_points, mask_of
from .spaces import Space

DEFAULT_MAX_HOMEO_POINTS = 8
# compose tables are materialized in full only for groups up to this order
MAX_TABLE_ORDER = 512

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p*q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def image(p: Perm, mask: int) -> int:
    return mask_of(p[x] for x in iter_points(mask))


def preimage(p: Perm, mask: int) -> int:
    return mask_of(x for x in range(len(p)) if mask >> p[x] & 1)


def cycle_notation(p: Perm) -> str:
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        parts.append("(" + " ".join(str(c) for c in cyc) + ")")
    return "".join(parts) if parts else "()"


class HomeoGroup:
    """A group of permutations with composition and inverse tables.

    Elements are kept in lexicographic permutation order; indices into
    ``elements`` are the points of the group topologies built on H(X).
    """

    def __init__(self, elements):
        self.elements: tuple[Perm, ...] = tuple(elements)
        if not self.elements:
            raise ValueError("a permutation group needs at least the identity")
        self.n = len(self.elements[0])
        self.index = {p: i for i, p in enumerate(self.elements)}
        ident = identity(self.n)
        if ident not in self.index:
            raise ValueError("identity permutation missing")
        self.identity_index = self.index[ident]
        self.inverse_table = tuple(self.index[inverse(p)] for p in self.elements)
        self._compose: dict[tuple[int, int], int] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, HomeoGroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"HomeoGroup(order={self.order}, n={self.n})"

    def compose_index(self, i: int, j: int) -> int:
        """Index of elements[i] composed after elements[j]."""
        key = (i, j)
        out = self._compose.get(key)
        if out is None:
            out = self.index[compose(self.elements[i], self.elements[j])]
            self._compose[key] = out
        return out

    @property
    def compose_table(self) -> tuple[tuple[int, ...], ...]:
        if self.order > MAX_TABLE_ORDER:
            raise ValueError(f"group order {self.order} exceeds table cap")
        return tuple(
            tuple(self.compose_index(i, j) for j in range(self.order))
            for i in range(self.order)
        )

    def __getstate__(self):
        return self.elements

    def __setstate__(self, elements):
        self.__init__(elements)


@lru_cache(maxsize=8192)
def _homeo_group(space: Space, max_n: int) -> HomeoGroup:
    n = space.n
    if n > max_n:
        raise ValueError(f"point count {n} exceeds permutation bound {max_n}")
    opens = space.opens
    open_set = set(opens)
    kept = []
    for p in itertools.permutations(range(n)):
        if all(image(p, o) in open_set for o in opens):
            kept.append(p)
    return HomeoGroup(kept)


def enumerate_homeomorphisms(space: Space, max_n: int = DEFAULT_MAX_HOMEO_POINTS) -> HomeoGroup:
    """All permutations mapping opens onto opens, with group tables."""
    return _homeo_group(space, max_n)


def orbits_of_opens(space: Space, group: HomeoGroup) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of the open family under the group action."""
    orbits = []
    seen = set()
    for o in space.opens:
        if o in seen:
            continue
        orbit = {image(p, o) for p in group.elements}
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return tuple(orbits)


def stabilizer(group: HomeoGroup, a: int) -> HomeoGroup:
    """Subgroup of elements fixing the point a."""
    if a < 0 or a >= group.n:
        raise ValueError(f"point {a} outside ground set of size {group.n}")
    return HomeoGroup(tuple(p for p in group.elements if p[a] == a))


def stabilizer_indices(group: HomeoGroup, a: int) -> tuple[int, ...]:
    return tuple(i for i, p in enumerate(group.elements) if p[a] == a)


def is_homogeneous(space: Space, group: HomeoGroup) -> bool:
    """True iff the group action on points is transitive."""
    if space.n <= 1:
        return True
    orbit = mask_of(p[0] for p in group.elements)
    return orbit == space.full
