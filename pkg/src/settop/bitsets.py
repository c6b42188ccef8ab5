"""Bitmask subsets of a finite ground set {0, ..., n-1}.

A subset is a plain int whose bit i stands for point i.  All set algebra is
int algebra: union is ``|``, intersection ``&``, difference ``a & ~b``.
Masks are arbitrary-precision, so ground sets are not limited to machine
word width.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(pts: Iterable[int]) -> int:
    m = 0
    for p in pts:
        m |= 1 << p
    return m


def iter_points(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def points(mask: int) -> tuple[int, ...]:
    return tuple(iter_points(mask))


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def complement(mask: int, n: int) -> int:
    return full_mask(n) & ~mask


def render(mask: int) -> str:
    """Text form of a subset: ascending indices, '-' for the empty set."""
    if mask == 0:
        return "-"
    return " ".join(str(p) for p in iter_points(mask))


def parse_mask(text: str) -> int:
    """Inverse of render: '-' or whitespace-separated point indices."""
    text = text.strip()
    if text == "-" or not text:
        return 0
    m = 0
    for tok in text.split():
        p = int(tok)
        if p < 0:
            raise ValueError(f"negative point index {p!r}")
        m |= 1 << p
    return m
