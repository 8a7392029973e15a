"""
Height functions on the vertex graph G and the lattice structure they put
on tilings.

Heights live in a dense ``(2n+3, 2n+3)`` array indexed by
``[y + n + 1, x + n + 1]``; entries outside G hold ``OUTSIDE``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .lattice import (
    V_SOUTH,
    Block,
    Domino,
    Tiling,
    apply_move,
    canonical_tiling,
    has_block,
    is_white,
    raising_fill,
    validate_tiling,
)

OUTSIDE = -1


class HeightError(ValueError):
    def __init__(self, message: str, vertex: tuple[int, int] | None = None):
        super().__init__(message)
        self.vertex = vertex


def _mask(n: int) -> np.ndarray:
    r = n + 1
    y, x = np.mgrid[-r : r + 1, -r : r + 1]
    return np.abs(x) + np.abs(y) <= r


def boundary_height(n: int, x: int, y: int) -> int | None:
    """Pinned height of a boundary vertex, ``None`` for interior vertices."""
    level = abs(x) + abs(y)
    if level == n + 1:
        return 2 * abs(y)
    if level == n:
        return 2 * abs(y) + 1
    return None


class HeightFunction:
    """Integer vertex labels of G for a fixed order."""

    __slots__ = ("order", "values")

    def __init__(self, order: int, values: np.ndarray):
        values = np.asarray(values, dtype=np.int64)
        values.setflags(write=False)
        self.order = order
        self.values = values

    def __getitem__(self, v: tuple[int, int]) -> int:
        x, y = v
        n = self.order
        if abs(x) + abs(y) > n + 1:
            raise KeyError(v)
        return int(self.values[y + n + 1, x + n + 1])

    def items(self):
        n = self.order
        r = n + 1
        for y in range(-r, r + 1):
            for x in range(-r, r + 1):
                if abs(x) + abs(y) <= r:
                    yield (x, y), int(self.values[y + r, x + r])

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeightFunction):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.order, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"HeightFunction(order={self.order})"


def heights_from_tiling(t: Tiling) -> HeightFunction:
    n = t.order
    r = n + 1
    H = np.full((2 * r + 1, 2 * r + 1), OUTSIDE, dtype=np.int64)
    for y in range(-r, r + 1):
        x0 = -(r - abs(y))
        h = 2 * abs(y)
        H[y + r, x0 + r] = h
        for x in range(x0, -x0):
            bisected = t.code(x, y - 1) == V_SOUTH
            step = -3 if bisected else 1
            if not is_white(n, x, y):  # edge points east
                h += step
            else:
                h -= step
            H[y + r, x + 1 + r] = h
    return HeightFunction(n, H)


@lru_cache(maxsize=64)
def _min_heights(n: int) -> HeightFunction:
    return heights_from_tiling(canonical_tiling(n, "all_horizontal"))


@lru_cache(maxsize=64)
def _max_heights(n: int) -> HeightFunction:
    return heights_from_tiling(canonical_tiling(n, "all_vertical"))


def min_heights(n: int) -> HeightFunction:
    return _min_heights(n)


def max_heights(n: int) -> HeightFunction:
    return _max_heights(n)


def _oriented_edges(n: int):
    """Yield every edge of G once as ``(u, v)`` with ``u -> v`` in the standard orientation."""
    r = n + 1
    for y in range(-r, r + 1):
        for x in range(-r, r + 1):
            if abs(x) + abs(y) > r:
                continue
            if abs(x + 1) + abs(y) <= r:
                if not is_white(n, x, y):
                    yield (x, y), (x + 1, y)
                else:
                    yield (x + 1, y), (x, y)
            if abs(x) + abs(y + 1) <= r:
                if not is_white(n, x - 1, y):
                    yield (x, y), (x, y + 1)
                else:
                    yield (x, y + 1), (x, y)


def check_height_function(h: HeightFunction) -> None:
    """Raise :class:`HeightError` at the first violation of pinning or the step rule."""
    n = h.order
    r = n + 1
    if h.values.shape != (2 * r + 1, 2 * r + 1):
        raise HeightError(f"height array has shape {h.values.shape}, expected {(2 * r + 1,) * 2}")
    for (x, y), value in h.items():
        pinned = boundary_height(n, x, y)
        if pinned is not None and value != pinned:
            raise HeightError(f"boundary vertex {(x, y)} has height {value}, expected {pinned}", (x, y))
    for u, v in _oriented_edges(n):
        d = h[v] - h[u]
        if d not in (1, -3):
            raise HeightError(f"edge {u}->{v} steps by {d}; allowed steps are +1 and -3", v)


def tiling_from_heights(h: HeightFunction) -> Tiling:
    check_height_function(h)
    n = h.order
    ds = []
    for u, v in _oriented_edges(n):
        if h[v] - h[u] == -3:
            (x0, y0), (x1, y1) = sorted((u, v))
            if y0 == y1:
                ds.append(Domino(x0, y0 - 1, "V"))
            else:
                ds.append(Domino(x0 - 1, y0, "H"))
    return validate_tiling(n, ds)


class ReducedHeight:
    """``(H_T - H_min) / 4``; zero on the boundary."""

    __slots__ = ("order", "values")

    def __init__(self, order: int, values: np.ndarray):
        values.setflags(write=False)
        self.order = order
        self.values = values

    def __getitem__(self, v: tuple[int, int]) -> int:
        n = self.order
        return int(self.values[v[1] + n + 1, v[0] + n + 1])

    def total(self) -> int:
        return int(self.values[self.values > 0].sum())


def reduced(t: Tiling) -> ReducedHeight:
    n = t.order
    diff = heights_from_tiling(t).values - min_heights(n).values
    mask = _mask(n)
    assert np.all(diff[mask] % 4 == 0)
    out = np.where(mask, diff // 4, OUTSIDE)
    return ReducedHeight(n, out)


def rank(t: Tiling) -> int:
    return reduced(t).total()


def _same_order(h1: HeightFunction, h2: HeightFunction) -> None:
    if h1.order != h2.order:
        raise ValueError(f"order mismatch: {h1.order} vs {h2.order}")


def meet(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    _same_order(h1, h2)
    return HeightFunction(h1.order, np.minimum(h1.values, h2.values))


def join(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    _same_order(h1, h2)
    return HeightFunction(h1.order, np.maximum(h1.values, h2.values))


def heights_leq(h1: HeightFunction, h2: HeightFunction) -> bool:
    _same_order(h1, h2)
    return bool(np.all(h1.values <= h2.values))


def leq(t1: Tiling, t2: Tiling) -> bool:
    """``t1 <= t2`` in the tiling lattice (componentwise heights)."""
    if t1.order != t2.order:
        raise ValueError(f"order mismatch: {t1.order} vs {t2.order}")
    return heights_leq(heights_from_tiling(t1), heights_from_tiling(t2))


def descend_to_min(t: Tiling) -> list[tuple[tuple[int, int], str]]:
    """Lowering moves down to T_min, each taken at a vertex of maximal reduced height.

    A maximal-h vertex can only be lowered when its raw height also beats its
    neighbours, so among maximal-h vertices the one with the largest raw
    height is used; remaining ties go to larger y, then smaller x.
    """
    n = t.order
    r = n + 1
    h = reduced(t).values.copy()
    raw = heights_from_tiling(t).values.copy()
    moves = []
    while True:
        top = int(h.max()) if h.size else 0
        if top <= 0:
            break
        ys, xs = np.nonzero(h == top)
        y, x = min(zip(ys - r, xs - r), key=lambda p: (-raw[p[0] + r, p[1] + r], -p[0], p[1]))
        center = (int(x), int(y))
        site = Block(center, raising_fill(center, n))
        assert has_block(t, site), f"no lowering move at {center}"
        t = apply_move(t, site)
        h[y + r, x + r] -= 1
        raw[y + r, x + r] -= 4
        moves.append((center, "lowering"))
    return moves


def format_heights(h: HeightFunction) -> str:
    n = h.order
    r = n + 1
    lines = []
    for y in range(r, -r - 1, -1):
        row = []
        for x in range(-r, r + 1):
            row.append(str(h[(x, y)]) if abs(x) + abs(y) <= r else "·")
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def parse_heights(text: str) -> HeightFunction:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    size = len(rows)
    if size < 3 or size % 2 == 0 or any(len(row) != size for row in rows):
        raise HeightError("height text must be a square grid of odd side at least 3")
    r = size // 2
    values = np.full((size, size), OUTSIDE, dtype=np.int64)
    for k, row in enumerate(rows):
        y = r - k
        for x, tok in zip(range(-r, r + 1), row):
            inside = abs(x) + abs(y) <= r
            if tok == "·":
                if inside:
                    raise HeightError(f"missing height at {(x, y)}", (x, y))
                continue
            if not inside:
                raise HeightError(f"height given outside G at {(x, y)}", (x, y))
            values[y + r, x + r] = int(tok)
    return HeightFunction(r - 1, values)
