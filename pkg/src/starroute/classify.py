"""Classification of value positions for a (current, target) permutation pair.

Fix a current permutation ``c`` and target ``t`` of the same order.  A value
is *settled* when it already sits at its target position.  The unsettled
values other than ``c(1)`` and ``t(1)`` split four ways by which half they
occupy now versus which half they are destined for:

- ``ull``: now in the left half of ``c``, destined for the left half of ``t``
- ``urr``: now right, destined right
- ``ulr``: now left, destined right (crossed)
- ``url``: now right, destined left (crossed)

``crossed`` is ``ulr | url``.  ``sl``/``sr`` are the settled values in the
left/right half (a value settled at position 1 is in neither).  A relative
cycle is *alternating* when it has at least two elements and their current
positions alternate between the halves all the way around; position 1 breaks
alternation since it belongs to neither half.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import Perm, relative_cycles
from .topology import boundary


def _half(position: int, k: int) -> int:
    # 0: position 1, 1: left half, 2: right half
    if position == 1:
        return 0
    return 1 if position <= k else 2


@dataclass(frozen=True)
class ClassifiedSets:
    n: int
    k: int
    settled: frozenset[int]
    ull: frozenset[int]
    urr: frozenset[int]
    ulr: frozenset[int]
    url: frozenset[int]
    sl: frozenset[int]
    sr: frozenset[int]
    alternating_count: int
    nonsingleton_cycles: int

    @property
    def crossed(self) -> frozenset[int]:
        return self.ulr | self.url

    @property
    def crossed_count(self) -> int:
        return len(self.ulr) + len(self.url)

    @property
    def unsettled(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.settled

    @property
    def mismatched(self) -> int:
        return self.n - len(self.settled)


def is_alternating(cycle: Sequence[int], c: Sequence[int]) -> bool:
    """Whether a relative cycle alternates between the halves of ``c``.

    ``cycle`` is a cyclically ordered tuple of values; ``c`` supplies their
    current positions.  Singletons never alternate, and neither does any
    cycle with an element at position 1.
    """
    if len(cycle) < 2:
        return False
    k = boundary(len(c)).k
    pos = {v: i + 1 for i, v in enumerate(c)}
    halves = [_half(pos[v], k) for v in cycle]
    if any(h == 0 for h in halves):
        return False
    return all(halves[i] != halves[i - 1] for i in range(len(halves)))


def classify(c: Sequence[int], t: Sequence[int]) -> ClassifiedSets:
    """Full set partition of values for the pair ``(c, t)``.

    >>> sets = classify((2, 1, 4, 3, 5), (1, 2, 3, 4, 5))
    >>> sorted(sets.settled), sorted(sets.ulr), sorted(sets.url)
    ([5], [4], [3])
    """
    if len(c) != len(t):
        raise ValueError(f"order mismatch: {len(c)} vs {len(t)}")
    n = len(c)
    k = boundary(n).k
    tpos = [0] * (n + 1)
    for i, v in enumerate(t):
        tpos[v] = i + 1
    settled, ull, urr, ulr, url, sl, sr = [], [], [], [], [], [], []
    for i, v in enumerate(c):
        p = i + 1
        if tpos[v] == p:
            settled.append(v)
            ch = _half(p, k)
            if ch == 1:
                sl.append(v)
            elif ch == 2:
                sr.append(v)
            continue
        ch, th = _half(p, k), _half(tpos[v], k)
        if ch == 1 and th == 1:
            ull.append(v)
        elif ch == 2 and th == 2:
            urr.append(v)
        elif ch == 1 and th == 2:
            ulr.append(v)
        elif ch == 2 and th == 1:
            url.append(v)
        # ch == 0 or th == 0: c(1) or t(1), excluded from the four sets
    decomposition = relative_cycles(c, t)
    chi = sum(1 for cyc in decomposition.cycles if is_alternating(cyc, c))
    return ClassifiedSets(
        n=n,
        k=k,
        settled=frozenset(settled),
        ull=frozenset(ull),
        urr=frozenset(urr),
        ulr=frozenset(ulr),
        url=frozenset(url),
        sl=frozenset(sl),
        sr=frozenset(sr),
        alternating_count=chi,
        nonsingleton_cycles=decomposition.nonsingleton_count,
    )


def crossing_load(c: Sequence[int], t: Sequence[int]) -> int:
    """``|ull| + |urr|`` computed without building the full partition.

    This is the quantity the oriented router burns down before its final
    crossing move; it never increases along a well-formed route.
    """
    n = len(c)
    k = boundary(n).k
    tpos = [0] * (n + 1)
    for i, v in enumerate(t):
        tpos[v] = i + 1
    load = 0
    for i, v in enumerate(c):
        p = i + 1
        tp = tpos[v]
        if tp == p or p == 1 or tp == 1:
            continue
        if (p <= k) == (tp <= k):
            load += 1
    return load


def _counts(c: Sequence[int], t: Sequence[int]) -> tuple[int, int, int, int, int, int]:
    """Lean counterpart of :func:`classify` for hot loops.

    Returns ``(ull, urr, ulr, url, alternating, nonsingleton)`` as plain ints.
    """
    n = len(c)
    k = boundary(n).k
    tpos = [0] * (n + 1)
    for i, v in enumerate(t):
        tpos[v] = i + 1
    cpos = [0] * (n + 1)
    ull = urr = ulr = url = 0
    for i, v in enumerate(c):
        p = i + 1
        cpos[v] = p
        tp = tpos[v]
        if tp == p or p == 1 or tp == 1:
            continue
        cleft = p <= k
        tleft = tp <= k
        if cleft:
            if tleft:
                ull += 1
            else:
                ulr += 1
        elif tleft:
            url += 1
        else:
            urr += 1
    # cycles of c o t^-1: successor of value v is c[tpos[v] - 1]
    chi = nonsingleton = 0
    seen = [False] * (n + 1)
    for start in range(1, n + 1):
        if seen[start]:
            continue
        seen[start] = True
        succ = c[tpos[start] - 1]
        if succ == start:
            continue
        nonsingleton += 1
        length = 1
        alternating = cpos[start] != 1
        prev_left = cpos[start] <= k
        first_left = prev_left
        v = succ
        while v != start:
            seen[v] = True
            length += 1
            if cpos[v] == 1:
                alternating = False
            else:
                left = cpos[v] <= k
                if left == prev_left:
                    alternating = False
                prev_left = left
            v = c[tpos[v] - 1]
        if alternating and prev_left != first_left:
            chi += 1
    return ull, urr, ulr, url, chi, nonsingleton
