"""Element sets as Python int bitmasks (bit i <=> element i)."""
from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def sorted_members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: size first, then lexicographic sorted member list."""
    members = sorted_members(mask)
    return (len(members), members)
