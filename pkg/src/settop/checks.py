"""Predicates behind the verification campaigns.

Continuity is decided against the minimal base of the codomain; preimage
commutes with unions, so base-only checking agrees with checking the full
open family (asserted in debug runs whenever the codomain family is already
materialized, and oracle-tested).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import complement, full_mask, is_subset, iter_points, points
from .homeo import HomeoGroup, image, stabilizer_indices
from .setopen import GroupTopology, SubsetFamily
from .spaces import Space, product


@dataclass(frozen=True)
class MapTable:
    """A total point map between finite spaces; continuity is not assumed."""

    dom: Space
    cod: Space
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dom.n:
            raise ValueError("value table does not cover the domain")


def is_continuous(table: MapTable) -> bool:
    """Preimage of every open of the codomain is open in the domain."""
    dom = table.dom
    values = table.values
    ok = all(
        dom.is_open(_preimage_mask(values, member))
        for member in table.cod.minimal_base()
    )
    if __debug__ and table.cod._opens is not None and len(table.cod._opens) <= 4096:
        assert ok == _is_continuous_full_family(table)
    return ok


def _preimage_mask(values, mask: int) -> int:
    out = 0
    for x, v in enumerate(values):
        if mask >> v & 1:
            out |= 1 << x
    return out


def _is_continuous_full_family(table: MapTable) -> bool:
    return all(
        table.dom.is_open(_preimage_mask(table.values, o)) for o in table.cod.opens
    )


def composition_map(topology: GroupTopology) -> MapTable:
    """Composition H x H -> H over the square of the group topology."""
    group = topology.group
    m = group.order
    dom = product(topology.space, topology.space)
    values = tuple(
        group.compose_index(i, j) for i in range(m) for j in range(m)
    )
    return MapTable(dom, topology.space, values)


def inversion_map(topology: GroupTopology) -> MapTable:
    return MapTable(topology.space, topology.space, topology.group.inverse_table)


def evaluation_map(space: Space, group: HomeoGroup, topology: GroupTopology) -> MapTable:
    """Evaluation H x X -> X, (h, x) -> h(x)."""
    values = tuple(p[x] for p in group.elements for x in range(space.n))
    return MapTable(product(topology.space, space), space, values)


def _check_group_match(group: HomeoGroup, topology: GroupTopology):
    if not (topology.group is group or topology.group.elements == group.elements):
        raise ValueError("topology does not belong to the given group")


def is_paratopological_group(group: HomeoGroup, topology: GroupTopology) -> bool:
    """Composition is continuous on the square of the topology."""
    _check_group_match(group, topology)
    return is_continuous(composition_map(topology))


def is_topological_group(group: HomeoGroup, topology: GroupTopology) -> bool:
    """Composition and inversion are both continuous."""
    _check_group_match(group, topology)
    return is_paratopological_group(group, topology) and is_continuous(
        inversion_map(topology)
    )


def is_admissible(space: Space, group: HomeoGroup, topology: GroupTopology) -> bool:
    """Evaluation H x X -> X is continuous."""
    _check_group_match(group, topology)
    return is_continuous(evaluation_map(space, group, topology))


# ----------------------------------------------------------------------
# generating-family conditions

CONDITION_FLAGS = (
    "homeo_invariant",
    "difference_closed",
    "closure_enclosed",
    "closure_interpolated",
    "urysohn",
    "base",
    "connected_cover",
    "regular_open_members",
    "hereditarily_open",
)


@dataclass(frozen=True)
class ConditionReport:
    """Flags for a generating family, with a violating witness per false flag."""

    homeo_invariant: bool
    difference_closed: bool
    closure_enclosed: bool
    closure_interpolated: bool
    urysohn: bool
    base: bool
    connected_cover: bool
    regular_open_members: bool
    hereditarily_open: bool
    witnesses: tuple[tuple[str, tuple], ...]

    def witness(self, flag: str):
        for name, data in self.witnesses:
            if name == flag:
                return data
        return None


def _incl(a: int, b: int, strict: bool) -> bool:
    return is_subset(a, b) and (not strict or a != b)


def check_connected_cover(space: Space, family: SubsetFamily) -> bool:
    """Every member's closure lies in the union of the connected members
    (testing against the union of all of them suffices on a finite space)."""
    conn_union = 0
    for m in family.members:
        if space.is_connected(m):
            conn_union |= m
    return all(is_subset(space.closure(m), conn_union) for m in family.members)


def check_family_conditions(
    space: Space,
    group: HomeoGroup,
    family: SubsetFamily,
    strict_b: bool = False,
    strict_subsets: bool = False,
) -> ConditionReport:
    """Decide every family condition by exhaustive quantification.

    strict_b: a difference W - cl(V) that is empty only counts as present
    when the empty set is a member (the lenient default waives it).
    strict_subsets: read the inclusions in the enclosure and interpolation
    conditions as proper inclusions.
    """
    members = family.members
    member_set = set(members)
    open_set = set(space.opens)
    for m in members:
        if m not in open_set:
            raise ValueError(f"family member is not open: {m}")
    closures = {m: space.closure(m) for m in members}
    witnesses: list[tuple[str, tuple]] = []

    homeo_invariant = True
    for p in group.elements:
        for v in members:
            if image(p, v) not in member_set:
                homeo_invariant = False
                witnesses.append(("homeo_invariant", (p, v)))
                break
        if not homeo_invariant:
            break

    difference_closed = True
    for v in members:
        clv = closures[v]
        for w in members:
            if not is_subset(clv, w):
                continue
            diff = w & ~clv
            if diff == 0:
                if strict_b and 0 not in member_set:
                    difference_closed = False
                    witnesses.append(("difference_closed", (v, w)))
                    break
            elif diff not in member_set:
                difference_closed = False
                witnesses.append(("difference_closed", (v, w)))
                break
        if not difference_closed:
            break

    closure_enclosed = True
    for v in members:
        clv = closures[v]
        if not any(_incl(clv, w, strict_subsets) for w in members):
            closure_enclosed = False
            witnesses.append(("closure_enclosed", (v,)))
            break

    closure_interpolated = True
    for b1 in members:
        cl1 = closures[b1]
        for b2 in members:
            if not _incl(cl1, b2, strict_subsets):
                continue
            if not any(
                _incl(cl1, b3, strict_subsets)
                and _incl(b3, closures[b3], strict_subsets)
                and _incl(closures[b3], b2, strict_subsets)
                for b3 in members
            ):
                closure_interpolated = False
                witnesses.append(("closure_interpolated", (b1, b2)))
                break
        if not closure_interpolated:
            break

    base = space.is_base(members)
    if not base:
        for o in space.opens:
            u = 0
            for m in members:
                if is_subset(m, o):
                    u |= m
            if u != o:
                witnesses.append(("base", (o,)))
                break

    connected_cover = check_connected_cover(space, family)
    if not connected_cover:
        conn_union = 0
        for m in members:
            if space.is_connected(m):
                conn_union |= m
        for m in members:
            if not is_subset(space.closure(m), conn_union):
                witnesses.append(("connected_cover", (m,)))
                break

    regular_open_members = True
    for m in members:
        if not space.is_regular_open(m):
            regular_open_members = False
            witnesses.append(("regular_open_members", (m,)))
            break

    hereditarily_open = True
    for v in members:
        for o in space.opens:
            if o and is_subset(o, v) and o not in member_set:
                hereditarily_open = False
                witnesses.append(("hereditarily_open", (v, o)))
                break
        if not hereditarily_open:
            break

    urysohn = (
        homeo_invariant and difference_closed and closure_enclosed and closure_interpolated
    )
    return ConditionReport(
        homeo_invariant=homeo_invariant,
        difference_closed=difference_closed,
        closure_enclosed=closure_enclosed,
        closure_interpolated=closure_interpolated,
        urysohn=urysohn,
        base=base,
        connected_cover=connected_cover,
        regular_open_members=regular_open_members,
        hereditarily_open=hereditarily_open,
        witnesses=tuple(witnesses),
    )


# ----------------------------------------------------------------------
# acceptability, local homogeneity, quotient representation

def supported_identity_mask(group: HomeoGroup, region: int) -> int:
    """Elements that fix every point outside the region."""
    outside = complement(region, group.n)
    out = 0
    for i, p in enumerate(group.elements):
        if all(p[x] == x for x in iter_points(outside)):
            out |= 1 << i
    return out


def is_acceptable(space: Space, group: HomeoGroup, topology: GroupTopology) -> bool:
    """Group topology, evaluation continuous in the first variable, and the
    identity has arbitrarily small supported-homeomorphism neighbourhoods.

    The last clause quantifies over all open neighbourhoods U of the
    identity and all opens V around each point; it suffices to check the
    minimal such U and V (the clause is antitone in U and the supported set
    is monotone in V), which the brute-force oracle in the tests confirms.
    """
    _check_group_match(group, topology)
    if not is_topological_group(group, topology):
        return False
    for x in range(space.n):
        values = tuple(p[x] for p in group.elements)
        if not is_continuous(MapTable(topology.space, space, values)):
            return False
    u0 = topology.space.min_opens[group.identity_index] if group.order else 0
    for b in range(space.n):
        v = space.min_opens[b]
        if not is_subset(supported_identity_mask(group, v), u0):
            return False
    return True


def is_slh(space: Space, group: HomeoGroup) -> bool:
    """Any two points of a minimal-base element are exchanged by an element
    supported inside it.

    Every base of a finite space contains every minimal open set, and the
    property for a base is antitone under refinement, so the minimal base
    decides it for all bases (brute-forced over all bases in the tests).
    """
    for m in space.minimal_base():
        mask = supported_identity_mask(group, m)
        supported = [p for i, p in enumerate(group.elements) if mask >> i & 1]
        pts = points(m)
        for x in pts:
            reach = {p[x] for p in supported}
            if not all(y in reach for y in pts):
                return False
    return True


def quotient_check(
    space: Space, group: HomeoGroup, topology: GroupTopology, a: int
) -> bool:
    """The canonical map from the left-coset quotient of the stabilizer of a
    onto the space: well-defined bijection, continuous both ways."""
    _check_group_match(group, topology)
    if a < 0 or a >= space.n:
        raise ValueError(f"basepoint {a} outside the space")
    values = [p[a] for p in group.elements]
    orbit = set(values)
    if orbit != set(range(space.n)):
        return False
    blocks: dict[int, int] = {}
    for g, v in enumerate(values):
        blocks[v] = blocks.get(v, 0) | (1 << g)
    stab = stabilizer_indices(group, a)
    # left cosets g*Stab must be exactly the fibers of g -> g(a)
    for v, block in blocks.items():
        rep = (block & -block).bit_length() - 1
        coset = 0
        for s in stab:
            coset |= 1 << group.compose_index(rep, s)
        if coset != block:
            return False
    ordered = sorted(blocks.values(), key=lambda b: b & -b)
    quotient_space = topology.space.quotient(ordered)
    block_value = [values[(b & -b).bit_length() - 1] for b in ordered]
    if sorted(block_value) != list(range(space.n)):
        return False
    forward = MapTable(quotient_space, space, tuple(block_value))
    back_values = [0] * space.n
    for i, v in enumerate(block_value):
        back_values[v] = i
    backward = MapTable(space, quotient_space, tuple(back_values))
    return is_continuous(forward) and is_continuous(backward)
