"""
Geometry of the Aztec diamond: cells, checkerboard colorings, dominoes,
tilings and elementary moves.

Conventions used throughout the package:

* A square (cell) is named by its lower-left corner ``(a, b)``; it lies in
  the order-``n`` diamond iff ``|2a+1| + |2b+1| <= 2n``.
* A domino is ``Domino(a, b, "H")`` covering ``(a, b), (a+1, b)`` or
  ``Domino(a, b, "V")`` covering ``(a, b), (a, b+1)``.
* A :class:`Tiling` keeps a dense ``(2n, 2n)`` int8 grid indexed by
  ``[b + n, a + n]`` recording which half of which domino sits in each cell.
  The grid is what the sampler produces, so even a tiling with a million
  dominoes costs only a few megabytes.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from typing import NamedTuple

import numpy as np

# cell codes of the dense grid
EMPTY, H_WEST, H_EAST, V_SOUTH, V_NORTH = 0, 1, 2, 3, 4


class TilingError(ValueError):
    """Raised for an invalid domino cover; ``cell`` names the offending square."""

    def __init__(self, message: str, cell: tuple[int, int] | None = None):
        super().__init__(message)
        self.cell = cell


class Coloring(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    def other(self) -> Coloring:
        return Coloring.ODD if self is Coloring.EVEN else Coloring.EVEN


class Domino(NamedTuple):
    a: int
    b: int
    orient: str  # "H" or "V"

    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.orient == "H":
            return (self.a, self.b), (self.a + 1, self.b)
        return (self.a, self.b), (self.a, self.b + 1)

    def sort_key(self) -> tuple[int, int, str]:
        return (self.b, self.a, self.orient)


class Block(NamedTuple):
    """Two dominoes filling the 2x2 square around ``center``; ``fill`` is "H" or "V"."""

    center: tuple[int, int]
    fill: str

    def dominoes(self) -> tuple[Domino, Domino]:
        x, y = self.center
        if self.fill == "H":
            return Domino(x - 1, y - 1, "H"), Domino(x - 1, y, "H")
        return Domino(x - 1, y - 1, "V"), Domino(x, y - 1, "V")

    def rotated(self) -> Block:
        return Block(self.center, "V" if self.fill == "H" else "H")


def in_diamond(n: int, a: int, b: int) -> bool:
    return abs(2 * a + 1) + abs(2 * b + 1) <= 2 * n


def in_grid(n: int, x: int, y: int) -> bool:
    """Membership of vertex ``(x, y)`` in the vertex graph G of order ``n``."""
    return abs(x) + abs(y) <= n + 1


def diamond_cells(n: int) -> set[tuple[int, int]]:
    if n < 0:
        raise ValueError("order must be nonnegative")
    return {(a, b) for b in range(-n, n) for a in range(-n, n) if in_diamond(n, a, b)}


def grid_vertices(n: int) -> list[tuple[int, int]]:
    """Vertices of G sorted by (y, x)."""
    r = n + 1
    return [(x, y) for y in range(-r, r + 1) for x in range(-r, r + 1) if abs(x) + abs(y) <= r]


def is_white(n: int, a: int, b: int, coloring: Coloring = Coloring.EVEN) -> bool:
    white = (a + b - n) % 2 == 0
    return white if coloring is Coloring.EVEN else not white


def square_color(n: int, cell: tuple[int, int], coloring: Coloring = Coloring.EVEN) -> str:
    return "white" if is_white(n, cell[0], cell[1], coloring) else "black"


def vertex_parity(n: int, v: tuple[int, int]) -> str:
    return "even" if (v[0] + v[1] + n + 1) % 2 == 0 else "odd"


def standard_orientation(
    n: int, u: tuple[int, int], w: tuple[int, int], coloring: Coloring = Coloring.EVEN
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Direct the edge ``uw`` so that a black square is on its left."""
    dx, dy = w[0] - u[0], w[1] - u[1]
    if abs(dx) + abs(dy) != 1:
        raise ValueError(f"{u} and {w} are not adjacent")
    lo, hi = (u, w) if (dx, dy) in ((1, 0), (0, 1)) else (w, u)
    x, y = lo
    if dx != 0:
        # lo -> hi points east; the square on its left is the one above
        forward = not is_white(n, x, y, coloring)
    else:
        # lo -> hi points north; the square on its left is the one to the west
        forward = not is_white(n, x - 1, y, coloring)
    return (lo, hi) if forward else (hi, lo)


class Tiling:
    """An exact domino cover of the order-``n`` Aztec diamond.

    Construct through :func:`validate_tiling`, :func:`canonical_tiling` or
    :meth:`from_grid`; the constructor trusts its input.
    """

    __slots__ = ("order", "grid", "_hash")

    def __init__(self, order: int, grid: np.ndarray):
        grid.setflags(write=False)
        self.order = order
        self.grid = grid
        self._hash = None

    @classmethod
    def from_grid(cls, order: int, grid: np.ndarray, check: bool = True) -> Tiling:
        grid = np.ascontiguousarray(grid, dtype=np.int8)
        if grid.shape != (2 * order, 2 * order):
            raise TilingError(f"grid shape {grid.shape} does not match order {order}")
        if check:
            return validate_tiling(order, dominoes_from_grid(order, grid))
        return cls(order, grid)

    @property
    def dominoes(self) -> list[Domino]:
        return dominoes_from_grid(self.order, self.grid)

    def __len__(self) -> int:
        return self.order * (self.order + 1)

    def __iter__(self):
        return iter(self.dominoes)

    def code(self, a: int, b: int) -> int:
        n = self.order
        if not (-n <= a < n and -n <= b < n):
            return EMPTY
        return int(self.grid[b + n, a + n])

    def domino_at(self, a: int, b: int) -> Domino | None:
        c = self.code(a, b)
        if c == H_WEST:
            return Domino(a, b, "H")
        if c == H_EAST:
            return Domino(a - 1, b, "H")
        if c == V_SOUTH:
            return Domino(a, b, "V")
        if c == V_NORTH:
            return Domino(a, b - 1, "V")
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.grid, other.grid)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.grid.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Tiling(order={self.order}, v={v_stat(self)})"


def dominoes_from_grid(n: int, grid: np.ndarray) -> list[Domino]:
    out = []
    bs, as_ = np.nonzero(grid == H_WEST)
    out.extend(Domino(int(a) - n, int(b) - n, "H") for b, a in zip(bs, as_))
    bs, as_ = np.nonzero(grid == V_SOUTH)
    out.extend(Domino(int(a) - n, int(b) - n, "V") for b, a in zip(bs, as_))
    out.sort(key=Domino.sort_key)
    return out


def paint(grid: np.ndarray, n: int, d: Domino) -> None:
    a, b = d.a + n, d.b + n
    if d.orient == "H":
        grid[b, a], grid[b, a + 1] = H_WEST, H_EAST
    else:
        grid[b, a], grid[b + 1, a] = V_SOUTH, V_NORTH


def validate_tiling(n: int, dominoes: Iterable[Domino]) -> Tiling:
    grid = np.zeros((2 * n, 2 * n), dtype=np.int8)
    count = 0
    for d in dominoes:
        d = Domino(*d)
        if d.orient not in ("H", "V"):
            raise TilingError(f"bad orientation {d.orient!r}")
        for a, b in d.cells():
            if not in_diamond(n, a, b):
                raise TilingError(f"domino {tuple(d)} leaves the diamond at {(a, b)}", (a, b))
            if grid[b + n, a + n] != EMPTY:
                raise TilingError(f"overlap at {(a, b)}", (a, b))
        paint(grid, n, d)
        count += 1
    for a, b in sorted(diamond_cells(n), key=lambda c: (c[1], c[0])):
        if grid[b + n, a + n] == EMPTY:
            raise TilingError(f"gap at {(a, b)}", (a, b))
    assert count == n * (n + 1)
    return Tiling(n, grid)


def canonical_tiling(n: int, which: str = "all_horizontal") -> Tiling:
    ds = []
    if which == "all_horizontal":
        for b in range(-n, n):
            w = n - (b if b >= 0 else -b - 1)  # half-width of row b
            ds.extend(Domino(a, b, "H") for a in range(-w, w, 2))
    elif which == "all_vertical":
        for a in range(-n, n):
            w = n - (a if a >= 0 else -a - 1)
            ds.extend(Domino(a, b, "V") for b in range(-w, w, 2))
    else:
        raise ValueError(f"unknown canonical tiling {which!r}")
    return validate_tiling(n, ds)


def find_move_sites(t: Tiling) -> list[Block]:
    n = t.order
    g = t.grid
    sites = []
    for y in range(-n + 1, n):
        for x in range(-n + 1, n):
            i, j = y + n, x + n  # grid index of cell (x, y), the NE cell around center (x, y)
            if g[i - 1, j - 1] == H_WEST and g[i, j - 1] == H_WEST:
                sites.append(Block((x, y), "H"))
            elif g[i - 1, j - 1] == V_SOUTH and g[i - 1, j] == V_SOUTH:
                sites.append(Block((x, y), "V"))
    return sites


def has_block(t: Tiling, b: Block) -> bool:
    return all(t.domino_at(d.a, d.b) == d for d in b.dominoes())


def apply_move(t: Tiling, b: Block) -> Tiling:
    if not has_block(t, b):
        raise TilingError(f"{b} is not a move site of this tiling", b.center)
    n = t.order
    grid = t.grid.copy()
    for d in b.rotated().dominoes():
        paint(grid, n, d)
    return Tiling(n, grid)


def v_stat(t: Tiling) -> int:
    verticals = int(np.count_nonzero(t.grid == V_SOUTH))
    assert verticals % 2 == 0
    return verticals // 2


def raising_fill(center: tuple[int, int], n: int) -> str:
    """Block fill with the larger height at ``center``: two-V at even vertices."""
    return "V" if vertex_parity(n, center) == "even" else "H"
