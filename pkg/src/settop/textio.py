"""Space text format.

A space stanza is a header line ``n <count>`` followed by one line per open
set: space-separated point indices, ``-`` for the empty set.  The empty and
full sets may be omitted and are implied.  Lines starting with ``#`` are
comments; blank lines separate stanzas in streams.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .bitsets import full_mask, parse_mask, render
from .spaces import Space, SpaceError


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line)
    return out


def parse_space(text: str, max_points: int | None = None) -> Space:
    """Parse a single space stanza; raises SpaceError on malformed input."""
    lines = _content_lines(text)
    if not lines:
        raise SpaceError("empty space description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise SpaceError(f"expected header 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise SpaceError(f"bad point count {head[1]!r}") from exc
    opens = {0, full_mask(n)}
    for line in lines[1:]:
        try:
            opens.add(parse_mask(line))
        except ValueError as exc:
            raise SpaceError(f"bad open set line {line!r}: {exc}") from exc
    return Space.from_opens(n, opens, max_points=max_points)


def emit_space(space: Space) -> str:
    lines = [f"n {space.n}"]
    lines.extend(render(o) for o in space.opens)
    return "\n".join(lines) + "\n"


def parse_family_members(text: str) -> tuple[int, tuple[int, ...]]:
    """Parse a subset-family file: same shape as a space stanza, but the
    member lines carry no closure requirements."""
    lines = _content_lines(text)
    if not lines:
        raise SpaceError("empty family description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise SpaceError(f"expected header 'n <count>', got {lines[0]!r}")
    n = int(head[1])
    members = sorted({parse_mask(line) for line in lines[1:]})
    return n, tuple(members)


def fixture_path(name: str) -> Path:
    """Path of a packaged fixture file (e.g. 'sierpinski.space')."""
    return Path(str(resources.files("settop").joinpath("fixtures", name)))


def load_fixture(name: str) -> Space:
    return parse_space(fixture_path(name).read_text())
