"""Exhaustive verification campaigns over all small spaces.

A campaign sweeps every homeomorphism class with at most ``n_max`` points
(one-point spaces included), evaluates one implication per applicable
instance, and records a violation for every instance where the hypothesis
holds but the conclusion fails.  Exploratory campaigns use the same record
shape for findings but carry no pass/fail meaning.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace

from .checks import (
    check_family_conditions,
    is_acceptable,
    is_admissible,
    is_paratopological_group,
    is_slh,
    is_topological_group,
    quotient_check,
)
from .generate import close_under_finite_unions, topology_classes
from .homeo import enumerate_homeomorphisms, is_homogeneous, orbits_of_opens
from .setopen import (
    SubsetFamily,
    all_nonempty_opens,
    compare_topologies,
    refines,
    set_open_topology,
)
from .spaces import Space

DEFAULT_MAX_ORBITS = 20


@dataclass(frozen=True)
class CampaignOptions:
    strict_b: bool = False
    strict_subsets: bool = False
    include_empty: bool = False
    close_unions: bool = False
    max_orbits: int = DEFAULT_MAX_ORBITS
    start_index: int = 0
    jobs: int = 1

    def config_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in sorted(d)}


@dataclass(frozen=True)
class Violation:
    space_index: int
    n: int
    opens: tuple[int, ...]
    family: tuple[int, ...] | None
    predicate: str
    detail: str
    basepoint: int | None = None


@dataclass(frozen=True)
class CampaignReport:
    theorem_id: str
    n_max: int
    spaces_checked: int
    families_checked: int
    violations: tuple[Violation, ...]
    elapsed: float
    config: dict
    notes: tuple[tuple[str, int], ...] = ()

    def to_json(self) -> str:
        payload = {
            "theorem_id": self.theorem_id,
            "n_max": self.n_max,
            "spaces_checked": self.spaces_checked,
            "families_checked": self.families_checked,
            "violations": [
                {
                    "space_index": v.space_index,
                    "n": v.n,
                    "opens": list(v.opens),
                    "family": list(v.family) if v.family is not None else None,
                    "predicate": v.predicate,
                    "detail": v.detail,
                    "basepoint": v.basepoint,
                }
                for v in self.violations
            ],
            "elapsed": self.elapsed,
            "config": self.config,
            "notes": [list(n) for n in self.notes],
        }
        return json.dumps(payload, indent=2, sort_keys=True)


@dataclass(frozen=True)
class TheoremSpec:
    theorem_id: str
    asserted: bool
    uses_families: bool
    description: str


THEOREMS: dict[str, TheoremSpec] = {
    t.theorem_id: t
    for t in (
        TheoremSpec(
            "main_theorem",
            True,
            True,
            "regular-open members with invariance, difference closure, closure "
            "enclosure and a connected cover give a topological group under b_open",
        ),
        TheoremSpec(
            "closure_variant",
            True,
            True,
            "urysohn family with a connected cover gives a topological group "
            "under closure_b",
        ),
        TheoremSpec(
            "cond_a_para",
            True,
            True,
            "every invariant family gives a paratopological group under b_open",
        ),
        TheoremSpec(
            "porter",
            True,
            False,
            "the regular_open topology is always a topological group",
        ),
        TheoremSpec(
            "zc_group",
            True,
            False,
            "the zero_cozero topology is always a topological group, and is "
            "acceptable on T1 spaces",
        ),
        TheoremSpec(
            "eval_base",
            True,
            True,
            "a base family makes evaluation continuous under b_open, and under "
            "closure_b when the space is regular",
        ),
        TheoremSpec(
            "hb_refines_hc",
            True,
            False,
            "b_open over all nonempty opens refines compact_open",
        ),
        TheoremSpec(
            "ford_slh",
            True,
            False,
            "homogeneous zero-dimensional T1 spaces are strongly locally homogeneous",
        ),
        TheoremSpec(
            "quotient_rep",
            True,
            False,
            "homogeneous SLH spaces are homeomorphic to the stabilizer quotient "
            "of the zero_cozero group topology at every basepoint",
        ),
        TheoremSpec(
            "barb_vs_b",
            False,
            True,
            "exploratory: b_open refines closure_b for urysohn hereditarily "
            "open families",
        ),
        TheoremSpec(
            "para_vs_topo",
            False,
            True,
            "exploratory: paratopological instances that are not topological",
        ),
        TheoremSpec(
            "strict_refinement_search",
            False,
            False,
            "exploratory: spaces where b_open over all nonempty opens is "
            "strictly finer than compact_open",
        ),
    )
}


def enumerate_invariant_families(
    space: Space,
    group,
    include_empty: bool = False,
    close_unions: bool = False,
    max_orbits: int = DEFAULT_MAX_ORBITS,
) -> list[SubsetFamily]:
    """All nonempty unions of orbits of nonempty opens, in ascending order of
    the orbit-selection mask.  Such families are exactly the candidates for
    the generating-family conditions: invariance forces a union of orbits.
    """
    # homeomorphisms fix the empty set, so its orbit is the singleton (0,)
    orbits = [o for o in orbits_of_opens(space, group) if o != (0,)]
    k = len(orbits)
    if k > max_orbits:
        raise ValueError(f"orbit count {k} exceeds bound {max_orbits}")
    out = []
    seen = set()
    for sel in range(1, 1 << k):
        members: list[int] = []
        for i in range(k):
            if sel >> i & 1:
                members.extend(orbits[i])
        if close_unions:
            members = list(close_under_finite_unions(members))
        if include_empty:
            members.append(0)
        fam = SubsetFamily.of(space.n, members)
        if fam.members not in seen:
            seen.add(fam.members)
            out.append(fam)
    return out


def _campaign_spaces(n_max: int) -> list[Space]:
    out: list[Space] = []
    for n in range(1, n_max + 1):
        out.extend(topology_classes(n))
    return out


def _evaluate_space(theorem_id: str, space: Space, options: CampaignOptions):
    """Evaluate one theorem on one space.

    Returns (violations, families_checked, notes) where violations lack
    their global space index (the merger fills it in).
    """
    group = enumerate_homeomorphisms(space)
    violations: list[Violation] = []
    notes: dict[str, int] = {}
    families_checked = 0

    def family_list():
        return enumerate_invariant_families(
            space,
            group,
            include_empty=options.include_empty,
            close_unions=options.close_unions,
            max_orbits=options.max_orbits,
        )

    def record(predicate, detail, family=None, basepoint=None):
        violations.append(
            Violation(
                space_index=-1,
                n=space.n,
                opens=space.opens,
                family=family.members if family is not None else None,
                predicate=predicate,
                detail=detail,
                basepoint=basepoint,
            )
        )

    if theorem_id == "porter":
        topo = set_open_topology(space, group, "regular_open")
        if not is_topological_group(group, topo):
            record("topological_group[regular_open]", "inversion or composition discontinuous")

    elif theorem_id == "zc_group":
        topo = set_open_topology(space, group, "zero_cozero")
        if not is_topological_group(group, topo):
            record("topological_group[zero_cozero]", "inversion or composition discontinuous")
        if space.classify().t1:
            if not is_acceptable(space, group, topo):
                record("acceptable[zero_cozero]", "acceptability fails on a T1 space")
        elif not is_acceptable(space, group, topo):
            # informational only: the acceptability statement assumes a
            # Tychonoff space, which at finite scale means T1
            notes["zc_not_acceptable_non_t1"] = notes.get("zc_not_acceptable_non_t1", 0) + 1

    elif theorem_id == "cond_a_para":
        for fam in family_list():
            families_checked += 1
            topo = set_open_topology(space, group, "b_open", fam)
            if not is_paratopological_group(group, topo):
                record("paratopological_group[b_open]", "composition discontinuous", fam)

    elif theorem_id == "main_theorem":
        for fam in family_list():
            families_checked += 1
            if options.include_empty and 0 in fam.members:
                notes["empty_cover_vacuous"] = notes.get("empty_cover_vacuous", 0) + 1
            rep = check_family_conditions(
                space, group, fam, options.strict_b, options.strict_subsets
            )
            if not (
                rep.homeo_invariant
                and rep.difference_closed
                and rep.closure_enclosed
                and rep.regular_open_members
                and rep.connected_cover
            ):
                continue
            topo = set_open_topology(space, group, "b_open", fam)
            if not is_topological_group(group, topo):
                record("topological_group[b_open]", "hypothesis holds, conclusion fails", fam)

    elif theorem_id == "closure_variant":
        for fam in family_list():
            families_checked += 1
            if options.include_empty and 0 in fam.members:
                notes["empty_cover_vacuous"] = notes.get("empty_cover_vacuous", 0) + 1
            rep = check_family_conditions(
                space, group, fam, options.strict_b, options.strict_subsets
            )
            if not (rep.urysohn and rep.connected_cover):
                continue
            topo = set_open_topology(space, group, "closure_b", fam)
            if not is_topological_group(group, topo):
                record("topological_group[closure_b]", "hypothesis holds, conclusion fails", fam)

    elif theorem_id == "eval_base":
        regular = space.classify().regular
        for fam in family_list():
            families_checked += 1
            if not space.is_base(fam.members):
                continue
            topo = set_open_topology(space, group, "b_open", fam)
            if not is_admissible(space, group, topo):
                record("admissible[b_open]", "evaluation discontinuous for a base family", fam)
            if regular:
                topo_cl = set_open_topology(space, group, "closure_b", fam)
                if not is_admissible(space, group, topo_cl):
                    record(
                        "admissible[closure_b]",
                        "evaluation discontinuous on a regular space",
                        fam,
                    )

    elif theorem_id == "hb_refines_hc":
        fam = all_nonempty_opens(space)
        t_b = set_open_topology(space, group, "b_open", fam)
        t_c = set_open_topology(space, group, "compact_open")
        if not refines(t_b, t_c):
            record("refines[b_open_all>=compact_open]", "compact_open open set missing", fam)

    elif theorem_id == "ford_slh":
        cls = space.classify()
        if is_homogeneous(space, group) and cls.zero_dimensional and cls.t1:
            if not is_slh(space, group):
                record("slh", "homogeneous zero-dimensional T1 space not SLH")

    elif theorem_id == "quotient_rep":
        if is_homogeneous(space, group) and is_slh(space, group):
            topo = set_open_topology(space, group, "zero_cozero")
            if not is_acceptable(space, group, topo):
                record("acceptable[zero_cozero]", "zero_cozero not acceptable on a homogeneous SLH space")
            for a in range(space.n):
                if not quotient_check(space, group, topo, a):
                    record(
                        "quotient_homeomorphism[zero_cozero]",
                        "canonical stabilizer-quotient map is not a homeomorphism",
                        basepoint=a,
                    )

    elif theorem_id == "barb_vs_b":
        for fam in family_list():
            families_checked += 1
            rep = check_family_conditions(
                space, group, fam, options.strict_b, options.strict_subsets
            )
            if not (rep.urysohn and rep.hereditarily_open):
                continue
            t_b = set_open_topology(space, group, "b_open", fam)
            t_cl = set_open_topology(space, group, "closure_b", fam)
            if not refines(t_b, t_cl):
                record("refines[b_open>=closure_b]", "closure_b open set missing", fam)

    elif theorem_id == "para_vs_topo":
        for fam in family_list():
            families_checked += 1
            for mode in ("b_open", "closure_b"):
                topo = set_open_topology(space, group, mode, fam)
                if is_paratopological_group(group, topo) and not is_topological_group(
                    group, topo
                ):
                    record(
                        f"para_not_topo[{mode}]",
                        "composition continuous but inversion is not",
                        fam,
                    )

    elif theorem_id == "strict_refinement_search":
        fam = all_nonempty_opens(space)
        t_b = set_open_topology(space, group, "b_open", fam)
        t_c = set_open_topology(space, group, "compact_open")
        if refines(t_b, t_c) and not refines(t_c, t_b):
            record(
                "strictly_finer[b_open_all>compact_open]",
                "b_open over all nonempty opens is strictly finer",
                fam,
            )

    else:
        raise ValueError(f"unknown theorem_id {theorem_id!r}")

    return violations, families_checked, notes


def _worker(payload):
    theorem_id, index, n, opens, options_tuple = payload
    options = CampaignOptions(*options_tuple)
    space = Space.from_opens(n, opens)
    violations, families, notes = _evaluate_space(theorem_id, space, options)
    violations = [replace(v, space_index=index) for v in violations]
    return index, violations, families, sorted(notes.items())


def run_campaign(
    theorem_id: str, n_max: int, options: CampaignOptions | None = None
) -> CampaignReport:
    """Sweep a theorem over every homeomorphism class with <= n_max points."""
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem_id {theorem_id!r}")
    options = options or CampaignOptions()
    start = time.perf_counter()
    spaces = _campaign_spaces(n_max)
    work = [(i, s) for i, s in enumerate(spaces) if i >= options.start_index]
    all_violations: list[Violation] = []
    families_checked = 0
    notes: dict[str, int] = {}
    if options.jobs > 1:
        opt_tuple = (
            options.strict_b,
            options.strict_subsets,
            options.include_empty,
            options.close_unions,
            options.max_orbits,
            options.start_index,
            1,
        )
        payloads = [
            (theorem_id, i, s.n, s.opens, opt_tuple) for i, s in work
        ]
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            results = sorted(pool.map(_worker, payloads), key=lambda r: r[0])
        for _, violations, families, space_notes in results:
            all_violations.extend(violations)
            families_checked += families
            for key, count in space_notes:
                notes[key] = notes.get(key, 0) + count
    else:
        for i, space in work:
            violations, families, space_notes = _evaluate_space(
                theorem_id, space, options
            )
            all_violations.extend(replace(v, space_index=i) for v in violations)
            families_checked += families
            for key, count in space_notes.items():
                notes[key] = notes.get(key, 0) + count
    elapsed = time.perf_counter() - start
    return CampaignReport(
        theorem_id=theorem_id,
        n_max=n_max,
        spaces_checked=len(work),
        families_checked=families_checked,
        violations=tuple(all_violations),
        elapsed=elapsed,
        config=options.config_dict(),
        notes=tuple(sorted(notes.items())),
    )


def replay_violation(violation: Violation, options: CampaignOptions | None = None) -> bool:
    """Re-evaluate a recorded violation from scratch; True iff it reproduces."""
    options = options or CampaignOptions()
    space = Space.from_opens(violation.n, violation.opens)
    group = enumerate_homeomorphisms(space)
    fam = (
        SubsetFamily.of(violation.n, violation.family)
        if violation.family is not None
        else None
    )
    pred = violation.predicate
    if pred.startswith("topological_group["):
        mode = pred[len("topological_group[") : -1]
        topo = set_open_topology(space, group, mode, fam if mode in ("b_open", "closure_b") else None)
        return not is_topological_group(group, topo)
    if pred.startswith("paratopological_group["):
        mode = pred[len("paratopological_group[") : -1]
        topo = set_open_topology(space, group, mode, fam)
        return not is_paratopological_group(group, topo)
    if pred.startswith("admissible["):
        mode = pred[len("admissible[") : -1]
        topo = set_open_topology(space, group, mode, fam)
        return not is_admissible(space, group, topo)
    if pred.startswith("acceptable["):
        topo = set_open_topology(space, group, "zero_cozero")
        return not is_acceptable(space, group, topo)
    if pred == "slh":
        return not is_slh(space, group)
    if pred.startswith("quotient_homeomorphism["):
        topo = set_open_topology(space, group, "zero_cozero")
        return not quotient_check(space, group, topo, violation.basepoint)
    if pred == "refines[b_open_all>=compact_open]":
        t_b = set_open_topology(space, group, "b_open", all_nonempty_opens(space))
        t_c = set_open_topology(space, group, "compact_open")
        return not refines(t_b, t_c)
    if pred == "refines[b_open>=closure_b]":
        t_b = set_open_topology(space, group, "b_open", fam)
        t_cl = set_open_topology(space, group, "closure_b", fam)
        return not refines(t_b, t_cl)
    if pred.startswith("para_not_topo["):
        mode = pred[len("para_not_topo[") : -1]
        topo = set_open_topology(space, group, mode, fam)
        return is_paratopological_group(group, topo) and not is_topological_group(
            group, topo
        )
    if pred == "strictly_finer[b_open_all>compact_open]":
        t_b = set_open_topology(space, group, "b_open", all_nonempty_opens(space))
        t_c = set_open_topology(space, group, "compact_open")
        return refines(t_b, t_c) and not refines(t_c, t_b)
    raise ValueError(f"unknown predicate {pred!r}")


# ----------------------------------------------------------------------
# lattice reports

@dataclass(frozen=True)
class LatticeReport:
    """Merged comparison order of group topologies: nodes are equality
    classes (labeled by their provenances), covers are Hasse edges from
    coarser to strictly finer."""

    nodes: tuple[tuple[str, ...], ...]
    covers: tuple[tuple[int, int], ...]


def lattice_report(topologies) -> LatticeReport:
    topologies = list(topologies)
    if not topologies:
        return LatticeReport((), ())
    base = topologies[0]
    classes: list[list] = []
    for t in topologies:
        if not (t.group is base.group or t.group.elements == base.group.elements):
            raise ValueError("mismatched groups")
        for cl in classes:
            if compare_topologies(t, cl[0]) == "equal":
                cl.append(t)
                break
        else:
            classes.append([t])
    labeled = [tuple(sorted(t.provenance for t in cl)) for cl in classes]
    order = sorted(range(len(classes)), key=lambda i: labeled[i])
    classes = [classes[i] for i in order]
    labeled = [labeled[i] for i in order]
    strictly_below = [
        [
            j
            for j in range(len(classes))
            if j != i and compare_topologies(classes[j][0], classes[i][0]) == "coarser"
        ]
        for i in range(len(classes))
    ]
    covers = []
    for i, belows in enumerate(strictly_below):
        for j in belows:
            if not any(j in strictly_below[k] for k in belows if k != j):
                covers.append((j, i))
    return LatticeReport(tuple(labeled), tuple(sorted(covers)))
