"""Greedy routing on the star graph, undirected and orientation-respecting.

Two routers live here.  The *classic* router ignores arc directions: it
settles the value at position 1 into its target position whenever it is
unsettled, and otherwise seeds by pulling any unsettled value to the front.
Its hop count has a closed form (``classic_distance``), which equals the
undirected shortest-path distance.

The *oriented* router only ever uses outgoing arcs of the contiguous-half
orientation (``Scheme.FUJITA``).  From an even node it may touch positions in
the left half only, from an odd node the right half only; the roles of the
halves mirror with the node's parity.  Writing H for the reachable half and
A/C/SH for the unsettled same-half values, the crossed values currently in H,
and the settled values in H, each step picks the first matching case:

1. Settling — ``c(1)`` is destined for H: move it to its target position.
2. Crossing/seeding burn-down — ``c(1)`` is not destined for H and some
   unsettled value is in the same half as its target (``|ull|+|urr| > 0``):
   swap with an A value outside the relative cycle through ``c(1)`` (2.1),
   else the first A value walking that cycle backwards from ``c(1)`` (2.2),
   else an SH value (2.3).  H can consist entirely of crossed values while
   the burn-down set lives in the other half, leaving 2.1-2.3 with nothing
   to pick; then swap with a C value, which settles on the very next hop
   (2.4), or — only when H is a single all-else-excluded position — with
   the value destined for position 1 (2.5).
3. Final crossing — ``c(1)`` is destined for the opposite half and the
   burn-down count is zero: swap with a C value, preferring one whose
   relative cycle alternates between the halves (3.1); if C is empty (3.2),
   swap with ``t(1)`` when it is in H (a final crossing), else with a
   settled value (a pre-final crossing).
4. Seeding — ``c(1) = t(1)`` and the burn-down count is zero: swap with a
   C value.

All ties break toward the lowest current position.  Move kinds follow the
value at position 1: seeding when it equals ``t(1)``, settling when it moves
to its target position, crossing when it switches halves; the unique crossing
after which no further crossing occurs is tagged *final*, and a settled-value
swap that sets it up is tagged *pre-final*.

Routes split into phases: Phase One is the maximal settling prefix, Phase Two
runs through the final crossing move, Phase Three is the rest.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .classify import _counts as _set_counts
from .perm import Perm, apply_generator, parity
from .topology import Direction, Scheme, arc_direction, boundary


class MoveKind(enum.Enum):
    SETTLING = "settling"
    SEEDING = "seeding"
    CROSSING = "crossing"
    FINAL_CROSSING = "final-crossing"
    PRE_FINAL_CROSSING = "pre-final-crossing"


CROSSING_KINDS = frozenset(
    {MoveKind.CROSSING, MoveKind.FINAL_CROSSING, MoveKind.PRE_FINAL_CROSSING}
)


class RoutingInvariantError(RuntimeError):
    """A pick-set the analysis guarantees non-empty was empty, or a route ran
    past its hop cap.  Signals a routing bug (or an uncertified small order)."""


@dataclass(frozen=True)
class Hop:
    index: int  # 1-based position in the route
    node: Perm  # node the hop leaves from
    link: int
    move: MoveKind
    case: str  # decision-tree label: "1", "2.1", ..., "4", or "classic"
    phase: int  # 1, 2 or 3


@dataclass(frozen=True)
class RouteTrace:
    source: Perm
    target: Perm
    scheme: Scheme | None  # None for classic (undirected) routes
    hops: tuple[Hop, ...]

    @property
    def length(self) -> int:
        return len(self.hops)

    def nodes(self) -> Iterator[Perm]:
        """Every node on the route, source through target inclusive."""
        for hop in self.hops:
            yield hop.node
        yield self.target


def _hop_cap(n: int) -> int:
    # generous runaway guard: beyond any proven bound for certified orders
    return 4 * n + 8


def _positions(p: Sequence[int]) -> list[int]:
    pos = [0] * (len(p) + 1)
    for i, v in enumerate(p):
        pos[v] = i + 1
    return pos


def _target_halves(tpos: list[int], k: int) -> list[int]:
    return [0] + [0 if tp == 1 else (1 if tp <= k else 2) for tp in tpos[1:]]


# ---------------------------------------------------------------------------
# classic (undirected) router


def _classic_pick(c: list[int], t: Sequence[int], tpos: list[int]) -> tuple[int, MoveKind]:
    c1 = c[0]
    if c1 != t[0]:
        return tpos[c1], MoveKind.SETTLING
    for i in range(1, len(c)):
        if c[i] != t[i]:
            return i + 1, MoveKind.SEEDING
    raise RoutingInvariantError("classic pick called at the target")


def classic_step(c: Sequence[int], t: Sequence[int]) -> tuple[int, MoveKind]:
    """Next classic move from ``c`` toward ``t``: ``(link, kind)``.

    Settles ``c(1)`` when it is unsettled; otherwise seeds with the lowest
    position holding an unsettled value.  Raises ValueError at the target.
    """
    if len(c) != len(t):
        raise ValueError(f"order mismatch: {len(c)} vs {len(t)}")
    if tuple(c) == tuple(t):
        raise ValueError("already at the target; no step to take")
    return _classic_pick(list(c), t, _positions(t))


def classic_distance(s: Sequence[int], t: Sequence[int]) -> int:
    """Undirected shortest-path distance between ``s`` and ``t``.

    Closed form: (mismatched values) + (non-singleton relative cycles),
    minus 2 when position 1 already agrees... inverted: minus 2 exactly when
    it *disagrees*, since the first and last hops then do double duty.
    """
    n = len(s)
    if n != len(t):
        raise ValueError(f"order mismatch: {n} vs {len(t)}")
    tpos = _positions(t)
    mismatched = 0
    for i in range(n):
        if s[i] != t[i]:
            mismatched += 1
    seen = [False] * (n + 1)
    nonsingleton = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        seen[start] = True
        v = s[tpos[start] - 1]
        if v == start:
            continue
        nonsingleton += 1
        while v != start:
            seen[v] = True
            v = s[tpos[v] - 1]
    if s[0] == t[0]:
        return mismatched + nonsingleton
    return mismatched + nonsingleton - 2


def classic_distance_sets(s: Sequence[int], t: Sequence[int]) -> int:
    """The same distance computed from the half-partition counts:
    ``|ull| + |urr| + |crossed| + nonsingleton relative cycles``."""
    if len(s) != len(t):
        raise ValueError(f"order mismatch: {len(s)} vs {len(t)}")
    ull, urr, ulr, url, _, nonsingleton = _set_counts(s, t)
    return ull + urr + ulr + url + nonsingleton


# ---------------------------------------------------------------------------
# oriented router


def _oriented_pick(
    c: list[int],
    cpos: list[int],
    odd: int,
    t: Sequence[int],
    tpos: list[int],
    thalf: list[int],
    k: int,
) -> tuple[int, MoveKind, str]:
    n = len(c)
    c1 = c[0]
    t1 = t[0]
    home = 2 if odd else 1  # the half this node's outgoing links cover

    if thalf[c1] == home:
        return tpos[c1], MoveKind.SETTLING, "1"

    burn = 0  # |ull| + |urr| over both halves
    a_vals: list[int] = []  # home-half values destined for the home half
    c_list: list[int] = []  # positions of crossed values sitting in the home half
    sh_first = 0  # lowest-position settled value in the home half
    for i in range(1, n):
        v = c[i]
        p = i + 1
        tp = tpos[v]
        ch = 1 if p <= k else 2
        if tp == p:
            if ch == home and not sh_first:
                sh_first = p
            continue
        th = thalf[v]
        if th == ch:
            burn += 1
            if ch == home:
                a_vals.append(v)
        elif th and ch == home:
            c_list.append(p)

    if burn:
        kind = MoveKind.SEEDING if c1 == t1 else MoveKind.CROSSING
        if a_vals:
            cycle = {c1}
            w = c[tpos[c1] - 1]
            while w != c1:
                cycle.add(w)
                w = c[tpos[w] - 1]
            outside = [v for v in a_vals if v not in cycle]
            if outside:
                link = min(cpos[v] for v in outside)
                return link, kind, "2.1"
            a_set = set(a_vals)
            w = t[cpos[c1] - 1]  # backward step: predecessor in the relative cycle
            steps = 0
            while w not in a_set:
                w = t[cpos[w] - 1]
                steps += 1
                if steps > n:
                    raise RoutingInvariantError(
                        "backward cycle walk found no same-half value"
                    )
            return cpos[w], kind, "2.2"
        if sh_first:
            return sh_first, kind, "2.3"
        # The reachable half holds neither burn-down nor settled values, so
        # it is filled by crossed values plus at most the position-1 value.
        if c_list:
            return c_list[0], kind, "2.4"
        t1p = cpos[t1]
        if t1p == 1 or (1 if t1p <= k else 2) != home:
            raise RoutingInvariantError("nothing to displace in the reachable half")
        return t1p, kind, "2.5"

    if thalf[c1]:  # destined for the opposite half, burn-down complete
        if c_list:
            link = _prefer_alternating(c_list, c, cpos, tpos, k)
            return link, MoveKind.FINAL_CROSSING, "3.1"
        t1p = cpos[t1]
        t1_home = t1p != 1 and (1 if t1p <= k else 2) == home
        if t1_home:
            return t1p, MoveKind.FINAL_CROSSING, "3.2"
        if not sh_first:
            raise RoutingInvariantError("case 3.2 found neither t(1) nor a settled value")
        return sh_first, MoveKind.PRE_FINAL_CROSSING, "3.2"

    # c(1) == t(1) with burn-down complete: seed with a crossed value
    if not c_list:
        raise RoutingInvariantError("no crossed value available for case 4")
    return c_list[0], MoveKind.SEEDING, "4"


def _prefer_alternating(
    c_list: list[int],
    c: list[int],
    cpos: list[int],
    tpos: list[int],
    k: int,
) -> int:
    """Lowest position in ``c_list`` whose value lies on an alternating
    relative cycle; lowest position outright when no such value exists."""
    for p in c_list:
        start = c[p - 1]
        ok = True
        prev_left = p <= k
        first_left = prev_left
        w = c[tpos[start] - 1]
        while w != start:
            wp = cpos[w]
            if wp == 1:
                ok = False
                break
            left = wp <= k
            if left == prev_left:
                ok = False
                break
            prev_left = left
            w = c[tpos[w] - 1]
        if ok and prev_left != first_left:
            return p
    return c_list[0]


def oriented_step(
    c: Sequence[int], t: Sequence[int], scheme: Scheme = Scheme.FUJITA
) -> tuple[int, MoveKind, str]:
    """Next oriented move from ``c`` toward ``t``: ``(link, kind, case)``.

    The link always lies on an outgoing arc of ``c``.  Raises ValueError at
    the target or for schemes other than the contiguous-half one.
    """
    if len(c) != len(t):
        raise ValueError(f"order mismatch: {len(c)} vs {len(t)}")
    if scheme is not Scheme.FUJITA:
        raise ValueError("the oriented router is defined for the contiguous-half scheme")
    if tuple(c) == tuple(t):
        raise ValueError("already at the target; no step to take")
    k = boundary(len(c)).k
    tpos = _positions(t)
    return _oriented_pick(
        list(c), _positions(c), parity(c), t, tpos, _target_halves(tpos, k), k
    )


def _route_raw(
    s: Sequence[int], t: Sequence[int], oriented: bool
) -> tuple[list[Perm], list[int], list[MoveKind], list[str]]:
    """Shared route loop.  Returns (nodes before each hop, links, kinds, cases)."""
    n = len(s)
    k = boundary(n).k
    tpos = _positions(t)
    thalf = _target_halves(tpos, k)
    c = list(s)
    cpos = _positions(s)
    odd = parity(s)
    unsettled = sum(1 for i in range(n) if s[i] != t[i])
    cap = _hop_cap(n)
    nodes: list[Perm] = []
    links: list[int] = []
    kinds: list[MoveKind] = []
    cases: list[str] = []
    while unsettled:
        if oriented:
            link, kind, case = _oriented_pick(c, cpos, odd, t, tpos, thalf, k)
        else:
            link, kind = _classic_pick(c, t, tpos)
            case = "classic"
        nodes.append(tuple(c))
        links.append(link)
        kinds.append(kind)
        cases.append(case)
        i = link - 1
        was = (c[0] == t[0]) + (c[i] == t[i])
        c[0], c[i] = c[i], c[0]
        cpos[c[0]] = 1
        cpos[c[i]] = link
        unsettled += was - ((c[0] == t[0]) + (c[i] == t[i]))
        odd ^= 1
        if len(links) > cap:
            raise RoutingInvariantError(f"route exceeded {cap} hops without terminating")
    return nodes, links, kinds, cases


def _assign_phases(kinds: Sequence[MoveKind]) -> list[int]:
    """Phase labels: settling prefix = 1, through the last crossing-kind
    move = 2, remainder = 3."""
    m = len(kinds)
    len1 = 0
    while len1 < m and kinds[len1] is MoveKind.SETTLING:
        len1 += 1
    end2 = len1
    for j in range(m - 1, len1 - 1, -1):
        if kinds[j] in CROSSING_KINDS:
            end2 = j + 1
            break
    return [1] * len1 + [2] * (end2 - len1) + [3] * (m - end2)


def _build_trace(
    s: Sequence[int],
    t: Sequence[int],
    scheme: Scheme | None,
    raw: tuple[list[Perm], list[int], list[MoveKind], list[str]],
) -> RouteTrace:
    nodes, links, kinds, cases = raw
    phases = _assign_phases(kinds)
    hops = tuple(
        Hop(index=j + 1, node=nodes[j], link=links[j], move=kinds[j], case=cases[j], phase=phases[j])
        for j in range(len(links))
    )
    return RouteTrace(source=tuple(s), target=tuple(t), scheme=scheme, hops=hops)


def classic_route(s: Sequence[int], t: Sequence[int]) -> RouteTrace:
    """Full classic route; its length equals ``classic_distance(s, t)``."""
    if len(s) != len(t):
        raise ValueError(f"order mismatch: {len(s)} vs {len(t)}")
    return _build_trace(s, t, None, _route_raw(s, t, oriented=False))


def oriented_route(
    s: Sequence[int], t: Sequence[int], scheme: Scheme = Scheme.FUJITA
) -> RouteTrace:
    """Full oriented route from ``s`` to ``t`` along outgoing arcs only."""
    if len(s) != len(t):
        raise ValueError(f"order mismatch: {len(s)} vs {len(t)}")
    if scheme is not Scheme.FUJITA:
        raise ValueError("the oriented router is defined for the contiguous-half scheme")
    return _build_trace(s, t, scheme, _route_raw(s, t, oriented=True))


def hop_bound(s: Sequence[int], t: Sequence[int]) -> int:
    """Upper bound on the oriented route length, from the partition counts:
    ``|crossed| + max(6, 4*max(|ull|, |urr|) + alternating + 4)``."""
    if len(s) != len(t):
        raise ValueError(f"order mismatch: {len(s)} vs {len(t)}")
    ull, urr, ulr, url, chi, _ = _set_counts(s, t)
    return ulr + url + max(6, 4 * max(ull, urr) + chi + 4)


# ---------------------------------------------------------------------------
# trace validation


def validate_trace(trace: RouteTrace) -> list[str]:
    """Structural faults of a trace: broken node chaining, hops along
    non-outgoing arcs (oriented traces), wrong terminal node, runaway length.
    Empty list means the trace is well formed."""
    faults: list[str] = []
    current = trace.source
    for hop in trace.hops:
        if hop.node != current:
            faults.append(f"hop {hop.index}: node chain broken")
            current = hop.node
        try:
            nxt = apply_generator(current, hop.link)
        except ValueError as exc:
            faults.append(f"hop {hop.index}: {exc}")
            continue
        if trace.scheme is not None:
            if arc_direction(current, hop.link, trace.scheme) is not Direction.OUTGOING:
                faults.append(f"hop {hop.index}: link {hop.link} is not an outgoing arc")
        current = nxt
    if current != trace.target:
        faults.append("route does not terminate at the target")
    if trace.length > _hop_cap(len(trace.source)):
        faults.append("route exceeds the hop cap")
    if [h.index for h in trace.hops] != list(range(1, trace.length + 1)):
        faults.append("hop indices are not 1..length")
    return faults


@dataclass(frozen=True)
class PhaseReport:
    ok: bool
    violations: tuple[str, ...]
    phase_lengths: tuple[int, int, int]
    alpha: Perm  # node at the end of Phase One
    gamma: Perm  # node at the end of Phase Two
    extended: bool = False  # a 2.4/2.5 fallback hop interrupted the burn-down


def check_phase_invariants(trace: RouteTrace) -> PhaseReport:
    """Check the per-trace phase laws of the oriented router.

    With s the source, alpha the node after the settling prefix, gamma the
    node after the final crossing move, and X/chi/c the crossed count, the
    alternating-cycle count and the non-singleton relative cycle count
    toward the target:

    a. the settling prefix removes one crossed value per hop except its
       last: ``|X(alpha)| = |X(s)| - max(0, len1 - 1)``; chi never grows.
    b. if alpha has no unsettled value on the correct side (``ull = urr = 0``)
       and no crossed value in the half its own parity can reach (``ulr`` for
       an even alpha, ``url`` for an odd one), Phase Two has at most 2 hops,
       ``chi(gamma) <= 1`` and ``|X(gamma)| <= |X(alpha)| + 2``; otherwise
       Phase Two has at most ``2*max(ull, urr) + 1`` hops,
       ``chi(gamma) <= chi(alpha) + 1`` and
       ``|X(gamma)| <= |X(alpha)| + 2*max(ull, urr)``.
    c. Phase Three settles and seeds optimally: its length is exactly
       ``|X(gamma)| + c(gamma)``, and gamma has ``ull = urr = 0``.
    d. structure: the labelled phases match the settle-prefix/final-crossing
       split; Phase Two is all crossing moves except possibly its first;
       Phase Three contains no crossing move; there is exactly one final
       crossing when any crossing occurs, as the last of Phase Two, with a
       pre-final crossing (at most one) directly before it.

    Laws (b) and the all-crossing part of (d) describe an uninterrupted
    burn-down chain; they are skipped (``extended=True`` in the report) when
    a 2.4/2.5 hop had to displace a crossed value mid-chain, which hands the
    front to a settling run before the chain resumes.  Laws (a), (c) and the
    rest of (d) hold either way.

    Violations are reported, never raised.
    """
    hops = trace.hops
    if not hops:
        return PhaseReport(True, (), (0, 0, 0), trace.source, trace.source)
    extended = any(h.case in ("2.4", "2.5") for h in hops)
    t = trace.target
    kinds = [h.move for h in hops]
    faults: list[str] = []
    expected = _assign_phases(kinds)
    if [h.phase for h in hops] != expected:
        faults.append("phase labels do not match the phase definitions")
    len1 = sum(1 for p in expected if p == 1)
    len2 = sum(1 for p in expected if p == 2)
    len3 = len(hops) - len1 - len2
    nodes = [h.node for h in hops] + [t]
    alpha = nodes[len1]
    gamma = nodes[len1 + len2]

    s_ull, s_urr, s_ulr, s_url, s_chi, _ = _set_counts(trace.source, t)
    a_ull, a_urr, a_ulr, a_url, a_chi, _ = _set_counts(alpha, t)
    g_ull, g_urr, g_ulr, g_url, g_chi, g_cyc = _set_counts(gamma, t)
    s_x, a_x, g_x = s_ulr + s_url, a_ulr + a_url, g_ulr + g_url

    drop = len1 - 1 if len1 else 0
    if a_x != s_x - drop:
        faults.append(
            f"settling prefix of {len1} changed crossed count {s_x} -> {a_x}, expected {s_x - drop}"
        )
    if a_chi > s_chi:
        faults.append(f"alternating count grew over the settling prefix: {s_chi} -> {a_chi}")

    a_reach = a_url if parity(trace.source) ^ (len1 & 1) else a_ulr
    if extended:
        pass  # the burn-down chain was interrupted; (b) does not apply
    elif a_ull == 0 and a_urr == 0 and a_reach == 0:
        if g_chi > 1:
            faults.append(f"chi(gamma) = {g_chi} > 1 with no burn-down at alpha")
        if len2 > 2:
            faults.append(f"Phase Two has {len2} hops, expected <= 2")
        if g_x > a_x + 2:
            faults.append(f"crossed count {a_x} -> {g_x} over Phase Two, expected <= +2")
    else:
        m = max(a_ull, a_urr)
        if g_chi > a_chi + 1:
            faults.append(f"chi grew {a_chi} -> {g_chi} over Phase Two, expected <= +1")
        if len2 > 2 * m + 1:
            faults.append(f"Phase Two has {len2} hops, expected <= {2 * m + 1}")
        if g_x > a_x + 2 * m:
            faults.append(f"crossed count {a_x} -> {g_x} over Phase Two, expected <= +{2 * m}")

    if g_ull or g_urr:
        faults.append(f"gamma still has burn-down {g_ull}+{g_urr}")
    if len3 != g_x + g_cyc:
        faults.append(f"Phase Three has {len3} hops, expected {g_x} + {g_cyc}")

    if not extended:
        for j in range(len1 + 1, len1 + len2):
            if kinds[j] not in CROSSING_KINDS:
                faults.append(f"hop {j + 1} inside Phase Two is {kinds[j].value}")
    for j in range(len1 + len2, len(kinds)):
        if kinds[j] in CROSSING_KINDS:
            faults.append(f"hop {j + 1} in Phase Three is a crossing move")
    finals = [j for j, kind in enumerate(kinds) if kind is MoveKind.FINAL_CROSSING]
    any_crossing = any(kind in CROSSING_KINDS for kind in kinds)
    if any_crossing:
        if len(finals) != 1:
            faults.append(f"expected exactly one final crossing, found {len(finals)}")
        elif finals[0] != len1 + len2 - 1:
            faults.append("final crossing is not the last hop of Phase Two")
    elif finals:
        faults.append("final crossing present in a route without crossing moves")
    prefinals = [j for j, kind in enumerate(kinds) if kind is MoveKind.PRE_FINAL_CROSSING]
    if len(prefinals) > 1:
        faults.append(f"{len(prefinals)} pre-final crossings")
    elif prefinals and (len(finals) != 1 or prefinals[0] + 1 != finals[0]):
        faults.append("pre-final crossing is not directly before the final crossing")

    return PhaseReport(not faults, tuple(faults), (len1, len2, len3), alpha, gamma, extended)
