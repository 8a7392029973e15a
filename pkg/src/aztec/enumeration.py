"""
Brute-force oracles: exact-cover enumeration of domino tilings, the
generating polynomial AD(n; x, q) two ways, and flip-graph distances.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from functools import lru_cache

import numpy as np

from .config import check_bound
from .height import rank
from .lattice import Domino, Tiling, apply_move, canonical_tiling, diamond_cells, find_move_sites, paint, v_stat
from .poly import Poly, bipoly

Region = frozenset  # of (a, b) cells


def region(cells: Iterable[tuple[int, int]]) -> Region:
    return frozenset((int(a), int(b)) for a, b in cells)


def enumerate_tilings(rg: Iterable[tuple[int, int]]) -> Iterator[tuple[Domino, ...]]:
    """Yield every domino tiling of a finite cell set exactly once.

    Backtracks on the least uncovered cell in (b, a) order, trying the
    horizontal domino first, so the output order is deterministic.
    """
    cells = sorted(set(rg), key=lambda c: (c[1], c[0]))
    if len(cells) % 2:
        return
    index = {c: i for i, c in enumerate(cells)}
    covered = bytearray(len(cells))
    chosen: list[Domino] = []

    def first_free(start: int) -> int:
        while start < len(cells) and covered[start]:
            start += 1
        return start

    def rec(start: int):
        i = first_free(start)
        if i == len(cells):
            yield tuple(chosen)
            return
        a, b = cells[i]
        for orient, other in (("H", (a + 1, b)), ("V", (a, b + 1))):
            j = index.get(other)
            if j is None or covered[j]:
                continue
            covered[i] = covered[j] = 1
            chosen.append(Domino(a, b, orient))
            yield from rec(i + 1)
            chosen.pop()
            covered[i] = covered[j] = 0

    yield from rec(0)


def count_tilings(rg: Iterable[tuple[int, int]]) -> int:
    return sum(1 for _ in enumerate_tilings(rg))


def enumerate_diamond(n: int) -> Iterator[Tiling]:
    """All tilings of the order-``n`` diamond, bounded by the ``tilings`` bound."""
    check_bound("tilings", n)
    for ds in enumerate_tilings(diamond_cells(n)):
        grid = np.zeros((2 * n, 2 * n), dtype=np.int8)
        for d in ds:
            paint(grid, n, d)
        yield Tiling(n, grid)


@lru_cache(maxsize=8)
def all_tilings(n: int) -> tuple[Tiling, ...]:
    return tuple(enumerate_diamond(n))


def ad_poly_brute(n: int) -> Poly:
    """Sum of x^v(T) q^r(T) over all tilings, by enumeration."""
    check_bound("tilings", n)
    terms: dict = {}
    for t in enumerate_diamond(n):
        key = (v_stat(t), rank(t))
        terms[key] = terms.get(key, 0) + 1
    return bipoly(terms)


def ad_poly_product(n: int) -> Poly:
    """The product formula prod_{k<n} (1 + x q^(2k+1))^(n-k)."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    result = bipoly({(0, 0): 1})
    for k in range(n):
        result = result * bipoly({(0, 0): 1, (1, 2 * k + 1): 1}) ** (n - k)
    return result


def ad_count(n: int) -> int:
    return 2 ** (n * (n + 1) // 2)


@lru_cache(maxsize=8)
def _flip_distances(n: int) -> dict[Tiling, int]:
    start = canonical_tiling(n, "all_horizontal")
    dist = {start: 0}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for site in find_move_sites(t):
            u = apply_move(t, site)
            if u not in dist:
                dist[u] = dist[t] + 1
                queue.append(u)
    return dist


def flip_distance(t: Tiling) -> int:
    """Breadth-first distance from the all-horizontal tiling in the flip graph."""
    check_bound("flip", t.order)
    return _flip_distances(t.order)[t]


def flip_graph_size(n: int) -> int:
    """Number of tilings reachable from T_min by moves."""
    check_bound("flip", n)
    return len(_flip_distances(n))
