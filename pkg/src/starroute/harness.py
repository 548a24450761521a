"""Verification sweeps, lower-bound witnesses, and diameter tables.

Everything here re-derives what the other modules promise and counts the
exceptions.  ``verify`` runs named checks over ordered node pairs and returns
a report object; ``witness``/``lower_bound_check`` build the rotated-halves
permutation that realises the directed lower bound; ``diameter_table``
measures both orientation schemes side by side.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .oracle import bfs, diameter
from .perm import Perm, apply_generator, identity, relative_cycles
from .routing import (
    check_phase_invariants,
    classic_distance,
    classic_distance_sets,
    hop_bound,
    oriented_route,
    validate_trace,
)
from .topology import Scheme, boundary

ALL_CHECKS: tuple[str, ...] = (
    "route-validity",
    "hop-bound",
    "stretch-bound",
    "diameter-bound",
    "phase-structure",
    "crossing-monotone",
    "distance-vs-bfs",
    "set-formula",
    "split-merge",
)

_ROUTE_CHECKS = frozenset(ALL_CHECKS[:6])

SPLIT_MERGE_SAMPLES = 10_000


@dataclass(frozen=True)
class Violation:
    source: Perm
    target: Perm
    observed: object
    bound: object


@dataclass(frozen=True)
class CheckResult:
    name: str
    population: int
    violations: tuple[Violation, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class VerificationReport:
    n: int
    scheme: Scheme
    sources: str
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def hop_cap(n: int) -> int:
    """Worst-case oriented route length: ``2n+2`` for odd n, ``2n+4`` for even."""
    return 2 * n + 2 if n % 2 else 2 * n + 4


def _reduced_sources(n: int) -> list[Perm]:
    return [identity(n), apply_generator(identity(n), 2)]


def _burn_count(node: Sequence[int], tpos: list[int], k: int) -> int:
    """Unsettled values sitting in the same half as their target position."""
    burn = 0
    for i in range(1, len(node)):
        v = node[i]
        tp = tpos[v]
        if tp == i + 1 or tp == 1:
            continue
        if (tp <= k) == (i + 1 <= k):
            burn += 1
    return burn


def _route_violations(
    n: int,
    sources: list[Perm],
    targets: list[Perm],
    selected: list[str],
) -> dict[str, list[Violation]]:
    k = boundary(n).k
    cap = hop_cap(n)
    found: dict[str, list[Violation]] = {name: [] for name in selected}
    want_stretch = "stretch-bound" in found
    want_hop = "hop-bound" in found
    want_cap = "diameter-bound" in found
    want_valid = "route-validity" in found
    want_phase = "phase-structure" in found
    want_mono = "crossing-monotone" in found
    for s in sources:
        for t in targets:
            trace = oriented_route(s, t)
            length = trace.length
            if want_valid:
                problems = validate_trace(trace)
                if problems:
                    found["route-validity"].append(
                        Violation(s, t, "; ".join(problems), "valid directed route")
                    )
            if want_hop:
                cutoff = hop_bound(s, t)
                if length > cutoff:
                    found["hop-bound"].append(Violation(s, t, length, cutoff))
            if want_stretch:
                cutoff = 4 * classic_distance(s, t) + 4
                if length > cutoff:
                    found["stretch-bound"].append(Violation(s, t, length, cutoff))
            if want_cap and length > cap:
                found["diameter-bound"].append(Violation(s, t, length, cap))
            if want_phase:
                report = check_phase_invariants(trace)
                if not report.ok:
                    found["phase-structure"].append(
                        Violation(s, t, "; ".join(report.violations), "phase invariants")
                    )
            if want_mono:
                tpos = [0] * (n + 1)
                for i, v in enumerate(t):
                    tpos[v] = i + 1
                prev = _burn_count(s, tpos, k)
                for hop in trace.hops:
                    node = apply_generator(hop.node, hop.link)
                    cur = _burn_count(node, tpos, k)
                    if cur > prev:
                        found["crossing-monotone"].append(
                            Violation(s, t, f"{prev} -> {cur} at hop {hop.index}", "non-increasing")
                        )
                        break
                    prev = cur
    return found


def _distance_violations(
    n: int,
    sources: list[Perm],
    targets: list[Perm],
    selected: list[str],
) -> dict[str, list[Violation]]:
    found: dict[str, list[Violation]] = {name: [] for name in selected}
    want_bfs = "distance-vs-bfs" in found
    want_sets = "set-formula" in found
    for s in sources:
        field = bfs(s) if want_bfs else None
        for t in targets:
            d = classic_distance(s, t)
            if want_bfs:
                actual = field.distance(t)
                if d != actual:
                    found["distance-vs-bfs"].append(Violation(s, t, d, actual))
            if want_sets:
                via_sets = classic_distance_sets(s, t)
                if via_sets != d:
                    found["set-formula"].append(Violation(s, t, via_sets, d))
    return found


def _cycle_family(c: Perm, t: Perm) -> set[frozenset[int]]:
    return {frozenset(cy) for cy in relative_cycles(c, t).cycles}


def _split_merge_problem(c: Perm, t: Perm, link: int) -> str | None:
    """One swap must split the shared relative cycle or merge two, leaving
    every other cycle untouched; returns a description of any departure."""
    u, v = c[0], c[link - 1]
    before = _cycle_family(c, t)
    after = _cycle_family(apply_generator(c, link), t)
    cyc_u = next(cy for cy in before if u in cy)
    cyc_v = next(cy for cy in before if v in cy)
    if cyc_u == cyc_v:
        rest = before - {cyc_u}
        if not rest <= after:
            return "split disturbed an unrelated cycle"
        new = after - rest
        if len(new) != 2 or frozenset().union(*new) != cyc_u:
            return f"expected {set(cyc_u)} to split in two, got {[set(x) for x in new]}"
    else:
        rest = before - {cyc_u, cyc_v}
        if not rest <= after:
            return "merge disturbed an unrelated cycle"
        new = after - rest
        if len(new) != 1 or next(iter(new)) != cyc_u | cyc_v:
            return f"expected {set(cyc_u)} and {set(cyc_v)} to merge, got {[set(x) for x in new]}"
    return None


def _split_merge_violations(
    n: int, seed: int, sample_size: int
) -> tuple[list[Violation], int]:
    values = list(range(1, n + 1))
    found: list[Violation] = []
    if n <= 5:
        perms = [tuple(p) for p in itertools.permutations(values)]
        population = len(perms) * len(perms) * (n - 1)
        for c in perms:
            for t in perms:
                for link in range(2, n + 1):
                    problem = _split_merge_problem(c, t, link)
                    if problem:
                        found.append(Violation(c, t, f"link {link}: {problem}", "split/merge law"))
        return found, population
    rng = random.Random(seed)
    for _ in range(sample_size):
        c = values[:]
        t = values[:]
        rng.shuffle(c)
        rng.shuffle(t)
        link = rng.randint(2, n)
        problem = _split_merge_problem(tuple(c), tuple(t), link)
        if problem:
            found.append(Violation(tuple(c), tuple(t), f"link {link}: {problem}", "split/merge law"))
    return found, sample_size


def verify(
    n: int,
    scheme: Scheme | str = Scheme.FUJITA,
    checks: Iterable[str] | None = None,
    sources: str | None = None,
    seed: int = 0,
    sample_size: int = SPLIT_MERGE_SAMPLES,
    threads: int = 1,
) -> VerificationReport:
    """Run the named checks over ordered node pairs of the order-``n`` graph.

    ``sources`` is ``"all"`` (every permutation, default through n=6) or
    ``"reduced"`` (the identity plus one odd node, default from n=7 on; the
    two parity classes are interchangeable under even left-translations).
    Oriented-route checks demand the contiguous-half scheme.  ``seed`` and
    ``sample_size`` control the sampled split/merge law at n >= 6.  With
    ``threads > 1`` sources are swept concurrently.  Checks co-swept in one
    pass share their ``elapsed`` wall time.
    """
    if isinstance(scheme, str):
        scheme = Scheme.parse(scheme)
    selected = list(ALL_CHECKS) if checks is None else list(checks)
    unknown = [name for name in selected if name not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; valid: {', '.join(ALL_CHECKS)}")
    route_selected = [name for name in selected if name in _ROUTE_CHECKS]
    if route_selected and scheme is not Scheme.FUJITA:
        raise ValueError(
            "oriented-route checks are only defined for the contiguous-half "
            f"scheme, not {scheme.value}"
        )
    if sources is None:
        sources = "all" if n <= 6 else "reduced"
    if sources not in ("all", "reduced"):
        raise ValueError(f"sources must be 'all' or 'reduced', not {sources!r}")
    targets = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
    source_list = targets if sources == "all" else _reduced_sources(n)

    results: list[CheckResult] = []

    def run_pair_sweep(names: list[str], sweep) -> None:
        if not names:
            return
        population = len(source_list) * len(targets)
        start = time.perf_counter()
        if threads > 1:
            chunks = [source_list[i::threads] for i in range(threads)]
            merged: dict[str, list[Violation]] = {name: [] for name in names}
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for part in pool.map(lambda ch: sweep(n, ch, targets, names), chunks):
                    for name in names:
                        merged[name].extend(part[name])
            by_name = merged
        else:
            by_name = sweep(n, source_list, targets, names)
        elapsed = time.perf_counter() - start
        for name in names:
            results.append(CheckResult(name, population, tuple(by_name[name]), elapsed))

    run_pair_sweep(route_selected, _route_violations)
    run_pair_sweep(
        [name for name in selected if name in ("distance-vs-bfs", "set-formula")],
        _distance_violations,
    )
    if "split-merge" in selected:
        start = time.perf_counter()
        found, population = _split_merge_violations(n, seed, sample_size)
        results.append(
            CheckResult("split-merge", population, tuple(found), time.perf_counter() - start)
        )

    ordered = sorted(results, key=lambda c: selected.index(c.name))
    return VerificationReport(n, scheme, sources, tuple(ordered))


# ---------------------------------------------------------------------------
# lower-bound witness


def witness(n: int, variant: str = "default") -> Perm:
    """The rotated-halves permutation used for the directed lower bound.

    ``default`` cycles each half by one position: (1)(2..k)(k+1..n).  The
    ``even-refined`` form peels (2,3) off the left half — (1)(2,3)(4..k)
    (k+1..n) — and needs even n >= 8.

    >>> witness(5)
    (1, 3, 2, 5, 4)
    >>> witness(8, "even-refined")
    (1, 3, 2, 5, 4, 7, 8, 6)
    """
    if variant not in ("default", "even-refined"):
        raise ValueError(f"variant must be 'default' or 'even-refined', not {variant!r}")
    if n < 5:
        raise ValueError(f"witness needs n >= 5, got {n}")
    if variant == "even-refined" and (n % 2 or n < 8):
        raise ValueError(f"even-refined witness needs even n >= 8, got {n}")
    k = boundary(n).k
    w = list(range(1, n + 1))

    def rotate(lo: int, hi: int) -> None:
        for p in range(lo, hi):
            w[p - 1] = p + 1
        w[hi - 1] = lo

    if variant == "even-refined":
        rotate(2, 3)
        rotate(4, k)
    else:
        rotate(2, k)
    rotate(k + 1, n)
    return tuple(w)


@dataclass(frozen=True)
class LowerBoundReport:
    n: int
    witness: Perm
    variant: str
    distance: int
    required: int
    ok: bool
    supports_2n: bool


def lower_bound_check(n: int, scheme: Scheme | str = Scheme.FUJITA) -> LowerBoundReport:
    """Measure the directed distance from the witness to the identity.

    That distance lower-bounds the directed diameter; the report requires
    2n-1 at n in {5,6} and 2n from n=7 on.  ``supports_2n`` records whether
    the measured distance reaches 2n even where only 2n-1 is required.
    At even n >= 8 both witness variants are measured and the farther wins.
    """
    if not 5 <= n <= 9:
        raise ValueError(f"lower_bound_check covers n in 5..9, got {n}")
    if isinstance(scheme, str):
        scheme = Scheme.parse(scheme)
    best: tuple[int, Perm, str] | None = None
    variants = ["default"]
    if n % 2 == 0 and n >= 8:
        variants.append("even-refined")
    target = identity(n)
    for variant in variants:
        w = witness(n, variant)
        d = bfs(w, directed=True, scheme=scheme).distance(target)
        if best is None or d > best[0]:
            best = (d, w, variant)
    distance, w, variant = best
    required = 2 * n - 1 if n in (5, 6) else 2 * n
    return LowerBoundReport(
        n, w, variant, distance, required, distance >= required, distance >= 2 * n
    )


# ---------------------------------------------------------------------------
# scheme-comparison table


@dataclass(frozen=True)
class DiameterRow:
    n: int
    undirected: int
    fujita: int
    daytripathi: int
    lower: int | None
    upper: int | None
    mode: str


def diameter_table(ns: Iterable[int], mode: str | None = None) -> list[DiameterRow]:
    """Measured diameters per order: undirected and both schemes directed.

    ``lower``/``upper`` are the proven directed brackets for the
    contiguous-half scheme (blank below n=5, where they do not apply).
    ``mode`` defaults to exhaustive through n=7 and orbit beyond.
    """
    rows = []
    for n in ns:
        row_mode = mode or ("exhaustive" if n <= 7 else "orbit")
        und = diameter(n, directed=False, mode=row_mode).value
        fuj = diameter(n, directed=True, scheme=Scheme.FUJITA, mode=row_mode).value
        day = diameter(n, directed=True, scheme=Scheme.DAY_TRIPATHI, mode=row_mode).value
        lower = None if n < 5 else (2 * n - 1 if n in (5, 6) else 2 * n)
        upper = None if n < 5 else hop_cap(n)
        rows.append(DiameterRow(n, und, fuj, day, lower, upper, row_mode))
    return rows


def format_table(rows: Sequence[DiameterRow], fmt: str = "text") -> str:
    """Render diameter rows as aligned text, CSV, or a JSON array."""
    if fmt == "csv":
        lines = ["n,undirected,fujita,daytripathi,lower,upper,mode"]
        for r in rows:
            lower = "" if r.lower is None else r.lower
            upper = "" if r.upper is None else r.upper
            lines.append(
                f"{r.n},{r.undirected},{r.fujita},{r.daytripathi},{lower},{upper},{r.mode}"
            )
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps([r.__dict__ for r in rows], indent=2)
    if fmt == "text":
        header = ("n", "undirected", "fujita", "daytripathi", "lower", "upper", "mode")
        table = [header]
        for r in rows:
            table.append(
                tuple(
                    "-" if v is None else str(v)
                    for v in (r.n, r.undirected, r.fujita, r.daytripathi, r.lower, r.upper, r.mode)
                )
            )
        widths = [max(len(row[c]) for row in table) for c in range(len(header))]
        return "\n".join(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table
        )
    raise ValueError(f"format must be text, csv or json, not {fmt!r}")
