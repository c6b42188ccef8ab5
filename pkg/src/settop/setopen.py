"""Set-open topologies on homeomorphism groups.

``bracket(S, H, U, V)`` is the set of group elements h with h(U) inside V,
returned as a bitmask over element indices.  A construction mode picks the
families U and V range over; the topology generated by all those brackets
is represented by its minimal opens: the minimal open of g is the
intersection of all brackets containing g, and for a fixed U that
intersection is bracket(U, hull(g(U))) where hull gives the smallest
V-family superset.  This avoids materializing subbases or open families on
large groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitsets import full_mask, is_subset, render
from .homeo import HomeoGroup, image
from .spaces import Space

MODES = (
    "b_open",
    "closure_b",
    "compact_open",
    "closed_open",
    "zero_cozero",
    "regular_open",
)
FAMILY_MODES = ("b_open", "closure_b")


@dataclass(frozen=True)
class SubsetFamily:
    """A family of subsets of an n-point space, deduplicated and sorted."""

    n: int
    members: tuple[int, ...]

    @classmethod
    def of(cls, n: int, members) -> "SubsetFamily":
        full = full_mask(n)
        out = sorted(set(members))
        for m in out:
            if m & ~full:
                raise ValueError(f"member {render(m)} leaves the {n}-point ground set")
        return cls(n, tuple(out))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, mask):
        return mask in self.members


@dataclass(frozen=True, eq=False)
class GroupTopology:
    """A topology on the index set of a HomeoGroup, with its provenance."""

    group: HomeoGroup
    space: Space
    provenance: str


def bracket(space: Space, group: HomeoGroup, u: int, v: int) -> int:
    """Mask of element indices h with image(h, u) contained in v.

    u need not be open; the compact-open construction ranges it over all
    subsets of a finite space.
    """
    out = 0
    for i, p in enumerate(group.elements):
        if is_subset(image(p, u), v):
            out |= 1 << i
    return out


def _family_provenance(mode: str, members) -> str:
    return f"{mode} B=[{'|'.join(render(m) for m in members)}]"


def all_nonempty_opens(space: Space) -> SubsetFamily:
    return SubsetFamily.of(space.n, (o for o in space.opens if o))


def set_open_topology(
    space: Space,
    group: HomeoGroup,
    mode: str,
    family: SubsetFamily | None = None,
) -> GroupTopology:
    """Build one of the supported group topologies on H(X).

    b_open / closure_b take the generating family; compact_open ranges U
    over all subsets (every subset of a finite space is compact),
    closed_open over closed sets, zero_cozero over zero sets with V ranging
    over cozero sets, regular_open over all regular open sets.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode in FAMILY_MODES:
        if family is None:
            raise ValueError(f"mode {mode!r} requires a family")
        if family.n != space.n:
            raise ValueError("family ground set does not match the space")
        open_set = set(space.opens)
        for m in family.members:
            if m not in open_set:
                raise ValueError(f"family member {render(m)} is not open")
    elif family is not None:
        raise ValueError(f"mode {mode!r} does not take a family")

    if mode == "b_open":
        u_sets = list(family.members)
        provenance = _family_provenance(mode, family.members)
    elif mode == "closure_b":
        u_sets = sorted({space.closure(m) for m in family.members})
        provenance = _family_provenance(mode, family.members)
    elif mode == "compact_open":
        u_sets = list(range(1 << space.n))
        provenance = mode
    elif mode == "closed_open":
        u_sets = list(space.closed_sets())
        provenance = mode
    elif mode == "zero_cozero":
        u_sets = list(space.zero_sets())
        provenance = mode
    else:  # regular_open
        u_sets = list(space.regular_opens())
        provenance = mode

    hull = space.cozero_hull if mode == "zero_cozero" else space.open_hull

    m = group.order
    rows = [full_mask(m)] * m
    for u in u_sets:
        images = [image(p, u) for p in group.elements]
        by_hull: dict[int, int] = {}
        for g, img in enumerate(images):
            h = hull(img)
            br = by_hull.get(h)
            if br is None:
                br = 0
                for i, other in enumerate(images):
                    if is_subset(other, h):
                        br |= 1 << i
                by_hull[h] = br
            rows[g] &= br
    return GroupTopology(group, Space(m, tuple(rows)), provenance)


def _same_group(t1: GroupTopology, t2: GroupTopology) -> bool:
    return t1.group is t2.group or t1.group.elements == t2.group.elements


def refines(t1: GroupTopology, t2: GroupTopology) -> bool:
    """True iff every open of t2 is open in t1 (t1 finer or equal)."""
    if not _same_group(t1, t2):
        raise ValueError("mismatched groups")
    r1 = t1.space.min_opens
    r2 = t2.space.min_opens
    return all(is_subset(a, b) for a, b in zip(r1, r2))


def compare_topologies(t1: GroupTopology, t2: GroupTopology) -> str:
    """'equal', 'finer' (t1 strictly finer), 'coarser', or 'incomparable'."""
    f12 = refines(t1, t2)
    f21 = refines(t2, t1)
    if f12 and f21:
        return "equal"
    if f12:
        return "finer"
    if f21:
        return "coarser"
    return "incomparable"
