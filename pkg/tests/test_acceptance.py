"""Acceptance suite: one test per criterion, each printing a PASS line.

The oriented-route sweeps at n = 5, 6 (all ordered pairs) and n = 7
(symmetry-reduced sources) are shared across criteria through module-scoped
fixtures, so the expensive n = 6 sweep runs exactly once.  Run with ``-v``
(optionally ``-s`` to see the audit lines on passing runs).
"""
from __future__ import annotations

import csv
import os
import random
from pathlib import Path

import pytest

from starroute.harness import ALL_CHECKS, verify
from starroute.oracle import diameter
from starroute.perm import apply_generator, compose, parity
from starroute.topology import Scheme, arc_direction

ROUTE_CHECKS = list(ALL_CHECKS[:6])
ARTIFACT = Path(__file__).resolve().parent.parent / "results" / "diameter_table.csv"


def _audit(criterion: int, detail: str) -> None:
    print(f"criterion {criterion}: PASS — {detail}")


@pytest.fixture(scope="module")
def sweep5():
    return verify(5, checks=ROUTE_CHECKS)


@pytest.fixture(scope="module")
def sweep6():
    return verify(6, checks=ROUTE_CHECKS)


@pytest.fixture(scope="module")
def sweep7():
    return verify(7, checks=ROUTE_CHECKS, sources="reduced")


def _assert_clean(report, names):
    for name in names:
        result = report.check(name)
        assert result.ok, f"{name}: {result.violations[:3]}"


def test_criterion_1_undirected_diameter():
    expected = {3: 3, 4: 4, 5: 6, 6: 7, 7: 9, 8: 10}
    measured = {}
    for n, want in expected.items():
        mode = "exhaustive" if n <= 7 else "orbit"
        measured[n] = diameter(n, mode=mode).value
        assert measured[n] == want, f"n={n}: {measured[n]} != {want}"
        assert want == (3 * (n - 1)) // 2
    _audit(1, f"undirected diameters {measured} match 3(n-1)/2 rounded down")


@pytest.mark.parametrize("n", [5, 6])
def test_criterion_2_distance_formulas_full(n):
    report = verify(n, checks=["distance-vs-bfs", "set-formula"])
    _assert_clean(report, ["distance-vs-bfs", "set-formula"])
    pairs = report.check("distance-vs-bfs").population
    _audit(2, f"n={n}: both closed forms equal BFS on all {pairs} ordered pairs")


def test_criterion_2_distance_formulas_reduced_seven():
    report = verify(7, checks=["distance-vs-bfs", "set-formula"], sources="reduced")
    _assert_clean(report, ["distance-vs-bfs", "set-formula"])
    pairs = report.check("distance-vs-bfs").population
    _audit(2, f"n=7 reduced: both closed forms equal BFS on {pairs} pairs")


BOUND_CHECKS = ["route-validity", "hop-bound", "stretch-bound", "diameter-bound"]


def test_criterion_3_bound_suite_five(sweep5):
    _assert_clean(sweep5, BOUND_CHECKS)
    _audit(3, f"n=5: {sweep5.check('route-validity').population} routes, zero violations")


def test_criterion_3_bound_suite_six(sweep6):
    _assert_clean(sweep6, BOUND_CHECKS)
    _audit(3, f"n=6: {sweep6.check('route-validity').population} routes, zero violations")


def test_criterion_3_bound_suite_seven_reduced(sweep7):
    _assert_clean(sweep7, BOUND_CHECKS)
    _audit(3, f"n=7 reduced: {sweep7.check('route-validity').population} routes, zero violations")


def test_criterion_4_phase_structure(sweep5, sweep6, sweep7):
    for report, label in ((sweep5, "n=5"), (sweep6, "n=6"), (sweep7, "n=7 reduced")):
        _assert_clean(report, ["phase-structure", "crossing-monotone"])
    total = sum(r.check("phase-structure").population for r in (sweep5, sweep6, sweep7))
    _audit(4, f"phase laws hold on all {total} traces from criterion 3")


def test_criterion_5_directed_diameter_brackets():
    measured = {n: diameter(n, directed=True, mode="orbit").value for n in (5, 6, 7)}
    assert 9 <= measured[5] <= 12
    assert 11 <= measured[6] <= 16
    assert 14 <= measured[7] <= 16
    with ARTIFACT.open(newline="") as fh:
        rows = {int(row["n"]): row for row in csv.DictReader(fh)}
    for n in (5, 6, 7):
        assert int(rows[n]["fujita"]) == measured[n], "artifact out of date"
    _audit(5, f"contiguous-half diameters {measured} inside brackets, artifact agrees")


def test_criterion_6_orbit_mode_validity():
    for n in (4, 5, 6):
        for directed in (False, True):
            orbit = diameter(n, directed=directed, mode="orbit").value
            full = diameter(n, directed=directed, mode="exhaustive").value
            assert orbit == full, (n, directed)

    rng = random.Random(20260815)
    n = 7
    ident = tuple(range(1, n + 1))
    for _ in range(10_000):
        u = tuple(rng.sample(range(1, n + 1), n))
        h = tuple(rng.sample(range(1, n + 1), n))
        if parity(h):  # make h even by swapping one pair
            h = apply_generator(h, 2)
        assert parity(h) == 0
        link = rng.randint(2, n)
        hu = compose(h, u)
        # left translation by an even permutation preserves links and arcs
        assert compose(h, apply_generator(u, link)) == apply_generator(hu, link)
        for scheme in (Scheme.FUJITA, Scheme.DAY_TRIPATHI):
            assert arc_direction(hu, link, scheme) is arc_direction(u, link, scheme)
    _audit(6, "orbit = exhaustive at n=4..6; 10000 sampled translations preserve arcs")


def test_criterion_7_split_merge_law():
    for n in (4, 5):
        report = verify(n, checks=["split-merge"])
        result = report.check("split-merge")
        assert result.ok and result.population == _split_merge_population(n)
    sampled = verify(7, checks=["split-merge"], seed=1, sample_size=10_000)
    assert sampled.check("split-merge").ok
    assert sampled.check("split-merge").population == 10_000
    _audit(7, "swap splits/merges exactly one relative cycle: n=4,5 exhaustive + 10000 at n=7")


def _split_merge_population(n: int) -> int:
    import math

    return math.factorial(n) ** 2 * (n - 1)


def test_criterion_8_second_scheme_cross_check():
    value = diameter(6, directed=True, scheme=Scheme.DAY_TRIPATHI, mode="orbit").value
    assert value == 11
    _audit(8, "parity-link scheme diameter at n=6 is 11 = 2n-1")


@pytest.mark.skipif(
    not os.environ.get("STARROUTE_LONG"),
    reason="order-9 orbit sweep is an opt-in long run (STARROUTE_LONG=1)",
)
def test_criterion_8_order_nine_informational():
    values = {
        scheme.value: diameter(9, directed=True, scheme=scheme, mode="orbit").value
        for scheme in (Scheme.FUJITA, Scheme.DAY_TRIPATHI)
    }
    # informational: recorded for the table, no exact value asserted
    print(f"criterion 8 (informational): order-9 directed diameters {values}")
    assert all(12 <= v <= 22 for v in values.values())
