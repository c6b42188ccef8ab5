"""Command line interface.

Exit codes: 0 success, 1 bad fixture or bound, 2 usage error (argparse),
3 violations found by a campaign whose statement is asserted.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bitsets import render
from .campaigns import (
    THEOREMS,
    CampaignOptions,
    CampaignReport,
    lattice_report,
    run_campaign,
)
from .checks import (
    check_family_conditions,
    is_acceptable,
    is_admissible,
    is_paratopological_group,
    is_slh,
    is_topological_group,
    quotient_check,
)
from .generate import (
    DEFAULT_MAX_LABELED,
    DEFAULT_MAX_UP_TO_ISO,
    enumerate_topologies,
)
from .homeo import cycle_notation, enumerate_homeomorphisms, is_homogeneous, orbits_of_opens
from .setopen import (
    FAMILY_MODES,
    MODES,
    SubsetFamily,
    all_nonempty_opens,
    compare_topologies,
    set_open_topology,
)
from .spaces import Space, SpaceError
from .textio import emit_space, parse_family_members, parse_space

# group topologies are only summarized for groups up to this order
CHECK_GROUP_BOUND = 512

ENV_MAX_POINTS = "SETTOP_MAX_POINTS"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _sets(masks) -> str:
    return " | ".join(render(m) for m in masks)


def _env_bound(default: int) -> int:
    raw = os.environ.get(ENV_MAX_POINTS)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SpaceError(f"bad {ENV_MAX_POINTS} value {raw!r}")


def _read_space(path: str) -> Space:
    return parse_space(Path(path).read_text())


def check_report(space: Space, label: str) -> str:
    """Deterministic structured report for one space."""
    out = []
    push = out.append
    push(f"file: {label}")
    push(f"n: {space.n}")
    push(f"opens_count: {len(space.opens)}")
    push(f"opens: {_sets(space.opens)}")
    push(f"minimal_base: {_sets(space.minimal_base())}")
    cls = space.classify()
    push(
        "classification: "
        f"t0={_bool(cls.t0)} t1={_bool(cls.t1)} regular={_bool(cls.regular)} "
        f"semiregular={_bool(cls.semiregular)} zero_dimensional={_bool(cls.zero_dimensional)}"
    )
    comps = space.connected_components(space.full)
    push(f"connected: {_bool(len(comps) <= 1)}")
    push(f"components: {_sets(comps)}")
    push(f"zero_sets: {_sets(space.zero_sets())}")
    push(f"regular_opens: {_sets(space.regular_opens())}")
    group = enumerate_homeomorphisms(space)
    push(f"homeo_order: {group.order}")
    push(f"homeo_elements: {' | '.join(cycle_notation(p) for p in group.elements)}")
    orbits = orbits_of_opens(space, group)
    push(f"open_orbit_count: {len(orbits)}")
    for orbit in orbits:
        push(f"orbit: {_sets(orbit)}")
    push(f"homogeneous: {_bool(is_homogeneous(space, group))}")
    push(f"slh: {_bool(is_slh(space, group))}")
    fam = all_nonempty_opens(space)
    rep = check_family_conditions(space, group, fam)
    push(
        "family[all_nonempty_opens]: "
        f"homeo_invariant={_bool(rep.homeo_invariant)} "
        f"difference_closed={_bool(rep.difference_closed)} "
        f"closure_enclosed={_bool(rep.closure_enclosed)} "
        f"closure_interpolated={_bool(rep.closure_interpolated)} "
        f"urysohn={_bool(rep.urysohn)} "
        f"base={_bool(rep.base)} "
        f"connected_cover={_bool(rep.connected_cover)} "
        f"regular_open_members={_bool(rep.regular_open_members)} "
        f"hereditarily_open={_bool(rep.hereditarily_open)}"
    )
    if group.order > CHECK_GROUP_BOUND:
        push(f"topologies: skipped (group order {group.order} exceeds {CHECK_GROUP_BOUND})")
        return "\n".join(out) + "\n"
    topologies = {}
    for key, mode, family in (
        ("b_open_all", "b_open", fam),
        ("closure_b_all", "closure_b", fam),
        ("compact_open", "compact_open", None),
        ("closed_open", "closed_open", None),
        ("zero_cozero", "zero_cozero", None),
        ("regular_open", "regular_open", None),
    ):
        topo = set_open_topology(space, group, mode, family)
        topologies[key] = topo
        try:
            count = str(len(topo.space.opens))
        except SpaceError:
            count = ">cap"
        push(
            f"topology {key}: opens={count} "
            f"paratopological={_bool(is_paratopological_group(group, topo))} "
            f"topological={_bool(is_topological_group(group, topo))} "
            f"admissible={_bool(is_admissible(space, group, topo))} "
            f"acceptable={_bool(is_acceptable(space, group, topo))}"
        )
    push(
        "compare b_open_all compact_open: "
        + compare_topologies(topologies["b_open_all"], topologies["compact_open"])
    )
    push(
        "compare compact_open zero_cozero: "
        + compare_topologies(topologies["compact_open"], topologies["zero_cozero"])
    )
    for a in range(space.n):
        ok = quotient_check(space, group, topologies["zero_cozero"], a)
        push(f"quotient_check[zero_cozero] a={a}: {_bool(ok)}")
    return "\n".join(out) + "\n"


def campaign_text(report: CampaignReport) -> str:
    out = []
    out.append(f"campaign: {report.theorem_id}")
    out.append(f"max_points: {report.n_max}")
    out.append(
        "config: "
        + " ".join(f"{k}={str(v).lower()}" for k, v in report.config.items())
    )
    out.append(f"spaces_checked: {report.spaces_checked}")
    out.append(f"families_checked: {report.families_checked}")
    out.append(f"violations: {len(report.violations)}")
    for i, v in enumerate(report.violations, start=1):
        out.append(f"violation {i}:")
        out.append(f"  space_index: {v.space_index}")
        out.append(f"  n: {v.n}")
        out.append(f"  space: {_sets(v.opens)}")
        if v.family is not None:
            out.append(f"  family: {_sets(v.family)}")
        out.append(f"  predicate: {v.predicate}")
        if v.basepoint is not None:
            out.append(f"  basepoint: {v.basepoint}")
        out.append(f"  detail: {v.detail}")
    if report.notes:
        out.append(
            "notes: " + " ".join(f"{k}={count}" for k, count in report.notes)
        )
    else:
        out.append("notes: none")
    return "\n".join(out) + "\n"


def _cmd_enumerate(args) -> int:
    if args.points < 1:
        print("error: --points must be at least 1", file=sys.stderr)
        return 1
    default = DEFAULT_MAX_UP_TO_ISO if args.up_to_iso else DEFAULT_MAX_LABELED
    bound = _env_bound(default)
    try:
        spaces = list(
            enumerate_topologies(args.points, up_to_iso=args.up_to_iso, max_n=bound)
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    chunks = [emit_space(s) for s in spaces]
    sys.stdout.write("\n".join(chunks))
    return 0


def _cmd_check(args) -> int:
    space = _read_space(args.file)
    sys.stdout.write(check_report(space, Path(args.file).name))
    return 0


def _load_family(path: str, space: Space) -> SubsetFamily:
    n, members = parse_family_members(Path(path).read_text())
    if n != space.n:
        raise SpaceError(f"family ground set {n} does not match space {space.n}")
    return SubsetFamily.of(n, members)


def _cmd_topology(args) -> int:
    space = _read_space(args.file)
    group = enumerate_homeomorphisms(space)
    family = None
    if args.mode in FAMILY_MODES:
        family = (
            _load_family(args.family, space)
            if args.family
            else all_nonempty_opens(space)
        )
    elif args.family:
        print(f"error: mode {args.mode} does not take a family", file=sys.stderr)
        return 1
    topo = set_open_topology(space, group, args.mode, family)
    out = [
        f"provenance: {topo.provenance}",
        f"group_order: {group.order}",
        f"elements: {' | '.join(cycle_notation(p) for p in group.elements)}",
        f"space_n: {topo.space.n}",
        f"opens_count: {len(topo.space.opens)}",
    ]
    out.extend(f"open: {render(o)}" for o in topo.space.opens)
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def _run_campaign_cmd(theorem_id: str, args) -> int:
    options = CampaignOptions(
        strict_b=getattr(args, "strict_b", False),
        strict_subsets=getattr(args, "strict_subsets", False),
        include_empty=getattr(args, "include_empty", False),
        close_unions=getattr(args, "close_unions", False),
        start_index=getattr(args, "start_index", 0),
        jobs=getattr(args, "jobs", 1),
    )
    bound = _env_bound(DEFAULT_MAX_UP_TO_ISO)
    if args.max_points > bound:
        print(
            f"error: --max-points {args.max_points} exceeds bound {bound} "
            f"(override with {ENV_MAX_POINTS})",
            file=sys.stderr,
        )
        return 1
    report = run_campaign(theorem_id, args.max_points, options)
    sys.stdout.write(campaign_text(report))
    sys.stdout.write(f"# elapsed: {report.elapsed:.2f}s\n")
    if getattr(args, "json", None):
        Path(args.json).write_text(report.to_json() + "\n")
    if report.violations and THEOREMS[theorem_id].asserted:
        return 3
    return 0


def _cmd_verify(args) -> int:
    if args.theorem not in THEOREMS:
        print(
            f"error: unknown theorem {args.theorem!r}; known: "
            + " ".join(sorted(THEOREMS)),
            file=sys.stderr,
        )
        return 2
    return _run_campaign_cmd(args.theorem, args)


def _cmd_search(args) -> int:
    return _run_campaign_cmd("strict_refinement_search", args)


def _cmd_lattice(args) -> int:
    space = _read_space(args.file)
    group = enumerate_homeomorphisms(space)
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    for m in modes:
        if m not in MODES and m not in ("b_open_all", "closure_b_all"):
            print(f"error: unknown mode {m!r}", file=sys.stderr)
            return 2
    topologies = []
    fam = all_nonempty_opens(space)
    for m in modes:
        if m in ("b_open", "b_open_all"):
            topologies.append(set_open_topology(space, group, "b_open", fam))
        elif m in ("closure_b", "closure_b_all"):
            topologies.append(set_open_topology(space, group, "closure_b", fam))
        else:
            topologies.append(set_open_topology(space, group, m))
    rep = lattice_report(topologies)
    out = [f"file: {Path(args.file).name}", f"group_order: {group.order}"]
    for i, labels in enumerate(rep.nodes):
        out.append(f"node {i}: {', '.join(labels)}")
    for lo, hi in rep.covers:
        out.append(f"cover: {lo} < {hi}")
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="settop",
        description="Finite-model workbench for set-open topologies on "
        "homeomorphism groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream all topologies on N points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true", dest="up_to_iso")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="full predicate report for a space file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("topology", help="print a group topology")
    p.add_argument("file")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--family", help="family file for b_open/closure_b")
    p.set_defaults(func=_cmd_topology)

    def campaign_flags(p):
        p.add_argument("--max-points", type=int, required=True, dest="max_points")
        p.add_argument("--strict-b", action="store_true", dest="strict_b")
        p.add_argument("--strict-subsets", action="store_true", dest="strict_subsets")
        p.add_argument("--include-empty", action="store_true", dest="include_empty")
        p.add_argument("--close-unions", action="store_true", dest="close_unions")
        p.add_argument("--start-index", type=int, default=0, dest="start_index")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--json", help="write the machine-readable report here")

    p = sub.add_parser("verify", help="run a theorem campaign")
    p.add_argument("theorem")
    campaign_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="run an exploratory search")
    p.add_argument("target", choices=["strict-refinement"])
    campaign_flags(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("lattice", help="comparison order of group topologies")
    p.add_argument("file")
    p.add_argument("--modes", required=True, help="comma-separated mode list")
    p.set_defaults(func=_cmd_lattice)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpaceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
