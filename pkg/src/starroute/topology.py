"""Star-graph adjacency and the two unidirectional orientation schemes.

The star graph on n symbols has every permutation of 1..n as a vertex and an
edge labelled ``i`` between ``u`` and ``apply_generator(u, i)`` for each
``i`` in 2..n.  Positions 2..k with ``k = ceil((n-1)/2) + 1`` form the *left
half*, positions k+1..n the *right half*; position 1 belongs to neither.

Each edge carries one direction:

- ``Scheme.FUJITA``: an even vertex's outgoing links are exactly the left
  half (2..k); odd vertices reverse this.
- ``Scheme.DAY_TRIPATHI``: an even vertex's outgoing links are the
  even-numbered ones; odd vertices own the odd-numbered links.

Every generator flips parity, so both orientations direct each edge from one
parity class to the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import ceil
from typing import Sequence

from .perm import Perm, apply_generator, parity


class Scheme(enum.Enum):
    FUJITA = "fujita"
    DAY_TRIPATHI = "day-tripathi"

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown scheme {text!r} (expected 'fujita' or 'day-tripathi')")


class Direction(enum.Enum):
    OUTGOING = "out"
    INCOMING = "in"


@dataclass(frozen=True)
class HalfBoundary:
    """The left/right split of link positions for order ``n``."""

    n: int
    k: int
    left_positions: tuple[int, ...]
    right_positions: tuple[int, ...]


@lru_cache(maxsize=None)
def boundary(n: int) -> HalfBoundary:
    """Half boundary for order ``n``: left = 2..k, right = k+1..n.

    >>> boundary(5).k, boundary(5).left_positions, boundary(5).right_positions
    (3, (2, 3), (4, 5))
    """
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    k = ceil((n - 1) / 2) + 1
    return HalfBoundary(n, k, tuple(range(2, k + 1)), tuple(range(k + 1, n + 1)))


def neighbors(u: Sequence[int]) -> list[tuple[int, Perm]]:
    """All ``(link, neighbor)`` pairs of ``u``, links ascending."""
    return [(link, apply_generator(u, link)) for link in range(2, len(u) + 1)]


def arc_direction(u: Sequence[int], link: int, scheme: Scheme = Scheme.FUJITA) -> Direction:
    """Direction of the edge at ``u`` labelled ``link`` under ``scheme``."""
    n = len(u)
    if not 2 <= link <= n:
        raise ValueError(f"link must be within 2..{n}, got {link}")
    even = parity(u) == 0
    if scheme is Scheme.FUJITA:
        outgoing = (link <= boundary(n).k) == even
    elif scheme is Scheme.DAY_TRIPATHI:
        outgoing = (link % 2 == 0) == even
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown scheme: {scheme!r}")
    return Direction.OUTGOING if outgoing else Direction.INCOMING


def out_neighbors(u: Sequence[int], scheme: Scheme = Scheme.FUJITA) -> list[tuple[int, Perm]]:
    """Neighbors reached by following outgoing arcs from ``u``."""
    return [
        (link, v)
        for link, v in neighbors(u)
        if arc_direction(u, link, scheme) is Direction.OUTGOING
    ]


def in_neighbors(u: Sequence[int], scheme: Scheme = Scheme.FUJITA) -> list[tuple[int, Perm]]:
    """Neighbors with an arc pointing *into* ``u``."""
    return [
        (link, v)
        for link, v in neighbors(u)
        if arc_direction(u, link, scheme) is Direction.INCOMING
    ]
