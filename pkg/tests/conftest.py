from __future__ import annotations

import itertools

from hypothesis import strategies as st


def perms_of(n: int) -> st.SearchStrategy[tuple[int, ...]]:
    return st.permutations(list(range(1, n + 1))).map(tuple)


@st.composite
def perm_pairs(draw, min_n: int = 3, max_n: int = 8):
    """Two permutations of a shared, drawn order."""
    n = draw(st.integers(min_n, max_n))
    return draw(perms_of(n)), draw(perms_of(n))


def all_perms(n: int) -> list[tuple[int, ...]]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]
