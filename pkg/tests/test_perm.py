from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from starroute.perm import (
    apply_generator,
    check_perm,
    compose,
    cycles,
    format_perm,
    identity,
    inverse,
    parity,
    parse_perm,
    relative_cycles,
    relative_map,
)

from conftest import perm_pairs, perms_of


def test_parse_compact():
    assert parse_perm("21435") == (2, 1, 4, 3, 5)


def test_parse_separated():
    assert parse_perm("10,2,3,4,5,6,7,8,9,1") == (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    assert parse_perm(" 3,1,2 ") == (3, 1, 2)


def test_parse_rejects_garbage():
    for bad in ("", "11", "123a", "1,2,2", "0,1,2"):
        with pytest.raises(ValueError):
            parse_perm(bad)


def test_check_perm_rejects_short_and_nonbijective():
    with pytest.raises(ValueError):
        check_perm((1, 2))
    with pytest.raises(ValueError):
        check_perm((1, 2, 2, 4))


@given(perms_of(6))
def test_format_parse_round_trip(p):
    assert parse_perm(format_perm(p)) == p


@given(perms_of(11))
def test_format_parse_round_trip_two_digit(p):
    assert parse_perm(format_perm(p)) == p


@given(perm_pairs())
def test_compose_then_invert(pair):
    p, q = pair
    n = len(p)
    assert compose(p, inverse(p)) == identity(n)
    assert compose(inverse(p), p) == identity(n)
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


@given(perm_pairs())
def test_parity_is_a_homomorphism(pair):
    p, q = pair
    assert parity(compose(p, q)) == parity(p) ^ parity(q)
    assert parity(inverse(p)) == parity(p)


def test_parity_anchor_values():
    assert parity((1, 2, 3, 4, 5)) == 0
    assert parity((2, 1, 3, 4, 5)) == 1
    assert parity((2, 3, 1, 4, 5)) == 0


@given(perms_of(7))
def test_cycles_cover_and_canonical_form(p):
    dec = cycles(p)
    seen = sorted(v for c in dec.cycles for v in c)
    assert seen == list(range(1, 8))
    starts = [c[0] for c in dec.cycles]
    assert all(c[0] == min(c) for c in dec.cycles)
    assert starts == sorted(starts)
    # each cycle really is an orbit of the map i -> p(i)
    for c in dec.cycles:
        for i, v in enumerate(c):
            assert p[v - 1] == c[(i + 1) % len(c)]


def test_cycles_fixed_points_and_lookup():
    dec = cycles((2, 1, 3, 5, 4))
    assert dec.fixed_points == frozenset({3})
    assert dec.nonsingleton_count == 2
    assert dec.cycle_of(5) == (4, 5)
    with pytest.raises(ValueError):
        dec.cycle_of(9)


@given(perm_pairs())
def test_relative_map_fixed_points_are_settled_values(pair):
    s, t = pair
    sigma = relative_map(s, t)
    settled = {t[i] for i in range(len(s)) if s[i] == t[i]}
    assert relative_cycles(s, t).fixed_points == frozenset(settled)
    assert frozenset(v for v in range(1, len(s) + 1) if sigma[v - 1] == v) == frozenset(settled)


@given(perms_of(6))
def test_relative_map_to_self_is_identity(p):
    assert relative_map(p, p) == identity(6)


def test_relative_map_order_mismatch():
    with pytest.raises(ValueError):
        relative_map((1, 2, 3), (1, 2, 3, 4))


@given(perms_of(6), st.integers(2, 6))
def test_apply_generator_is_an_involution(p, link):
    q = apply_generator(p, link)
    assert q != p
    assert apply_generator(q, link) == p
    assert parity(q) == parity(p) ^ 1


def test_apply_generator_rejects_bad_link():
    with pytest.raises(ValueError):
        apply_generator((1, 2, 3), 1)
    with pytest.raises(ValueError):
        apply_generator((1, 2, 3), 4)


@given(perm_pairs(max_n=6), st.integers(2, 6))
def test_hop_left_multiplies_relative_map_by_front_transposition(pair, link):
    s, t = pair
    n = len(s)
    if link > n:
        link = 2 + (link % (n - 1))
    sigma = relative_map(s, t)
    after = relative_map(apply_generator(s, link), t)
    # swapping positions 1 and link exchanges the images of the two values
    # that map there, i.e. left-multiplies sigma by a transposition.
    moved = [v for v in range(1, n + 1) if sigma[v - 1] != after[v - 1]]
    assert len(moved) == 2
    a, b = moved
    assert after[a - 1] == sigma[b - 1] and after[b - 1] == sigma[a - 1]
