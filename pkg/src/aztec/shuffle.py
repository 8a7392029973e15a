"""
Domino shuffling: growing a tiling of order k-1 into one of order k.

Every stage works on one fixed checkerboard, the one in which cell (a, b) is
white iff ``a + b`` has the parity of ``k - 1``; it is the even coloring of the
order-(k-1) diamond and the odd coloring of the order-k diamond. A stage

1. removes the odd blocks of the old tiling (its holes),
2. slides every remaining domino one unit (even dominoes up or left, odd ones
   down or right),
3. fills the holes of the order-k result.

Holes before and after a stage sit on a common k x k index grid: position
``(i, j)`` (1-based) is the block centred at ``(-k-1+i+j, j-i)``. Walking a
column j top to bottom, old and new holes alternate, beginning and ending with
a new one. Each old hole hands its block to the next new hole below it, and the
topmost new hole of column j takes bit j of the stage (0 = two horizontal
dominoes, 1 = two vertical). This makes bit strings of length n(n+1)/2 and
tilings of order n correspond one to one.

The pure-Python path (``decode``/``encode``/``expand_random``) manipulates
domino sets and is meant for small orders and for tests. ``decode_grid`` runs
the same stages in a compiled kernel over two dense byte grids and backs the
samplers.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numba
import numpy as np

from .lattice import (
    EMPTY,
    H_EAST,
    H_WEST,
    V_NORTH,
    V_SOUTH,
    Block,
    Coloring,
    Domino,
    Tiling,
    in_diamond,
    is_white,
    validate_tiling,
)


class ShuffleError(ValueError):
    pass


class BitsExhausted(ShuffleError):
    pass


@dataclass(frozen=True)
class PartialTiling:
    """Dominoes plus the odd 2x2 holes (by centre) that complete them."""

    order: int
    coloring: Coloring
    dominoes: frozenset[Domino]
    holes: frozenset[tuple[int, int]]

    def complete(self, fills: dict[tuple[int, int], str]) -> Tiling:
        ds = list(self.dominoes)
        for c in self.holes:
            ds.extend(Block(c, fills[c]).dominoes())
        return validate_tiling(self.order, ds)

    def completions(self) -> Iterator[Tiling]:
        holes = sorted(self.holes)
        for mask in range(1 << len(holes)):
            yield self.complete({c: "HV"[(mask >> k) & 1] for k, c in enumerate(holes)})


def stage_coloring_white(k: int, a: int, b: int) -> bool:
    """Cell colour on the stage-k checkerboard."""
    return (a + b - (k - 1)) % 2 == 0


def domino_parity(n: int, c: Coloring, d: Domino) -> str:
    """"even" when the leftmost cell of the domino's top row is white."""
    a, b = (d.a, d.b) if d.orient == "H" else (d.a, d.b + 1)
    return "even" if is_white(n, a, b, c) else "odd"


def shuffle_domino(n: int, c: Coloring, d: Domino) -> Domino:
    even = domino_parity(n, c, d) == "even"
    if d.orient == "H":
        return Domino(d.a, d.b + 1 if even else d.b - 1, "H")
    return Domino(d.a - 1 if even else d.a + 1, d.b, "V")


def is_odd_block(n: int, c: Coloring, center: tuple[int, int]) -> bool:
    x, y = center
    return is_white(n, x - 1, y - 1, c)


def _odd_blocks(n: int, c: Coloring, ds: set[Domino]) -> list[Block]:
    found = []
    for d in ds:
        if d.orient == "H" and Domino(d.a, d.b + 1, "H") in ds:
            center = (d.a + 1, d.b + 1)
        elif d.orient == "V" and Domino(d.a + 1, d.b, "V") in ds:
            center = (d.a + 1, d.b + 1)
        else:
            continue
        if is_odd_block(n, c, center):
            found.append(Block(center, d.orient))
    return found


def hole_index(k: int, center: tuple[int, int]) -> tuple[int, int]:
    """1-based (row, column) of a block centre on the stage-k index grid."""
    x, y = center
    return ((x - y + k + 1) // 2, (x + y + k + 1) // 2)


def hole_center(k: int, i: int, j: int) -> tuple[int, int]:
    return (-k - 1 + i + j, j - i)


def reduce(t: Tiling, c: Coloring) -> tuple[PartialTiling, list[Block]]:
    """Strip the odd blocks of ``t``; blocks come back in index-grid order."""
    n = t.order
    ds = set(t.dominoes)
    blocks = _odd_blocks(n, c, ds)
    for blk in blocks:
        ds.difference_update(blk.dominoes())
    blocks.sort(key=lambda b: (b.center[0] - b.center[1], b.center[0] + b.center[1]))
    return PartialTiling(n, c, frozenset(ds), frozenset(b.center for b in blocks)), blocks


def _find_holes(order: int, covered: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Split the uncovered cells into 2x2 blocks, scanning rows bottom-up."""
    holes = set()
    taken = set(covered)
    for b in range(-order, order):
        for a in range(-order, order):
            if not in_diamond(order, a, b) or (a, b) in taken:
                continue
            quad = [(a, b), (a + 1, b), (a, b + 1), (a + 1, b + 1)]
            if any(q in taken or not in_diamond(order, *q) for q in quad):
                raise ShuffleError(f"uncovered cell {(a, b)} is not the corner of a 2x2 hole")
            taken.update(quad)
            holes.add((a + 1, b + 1))
    return holes


def _shift(pt: PartialTiling, new_order: int, new_coloring: Coloring) -> PartialTiling:
    if _odd_blocks(pt.order, pt.coloring, set(pt.dominoes)):
        raise ShuffleError("input contains an odd block")
    moved = [shuffle_domino(pt.order, pt.coloring, d) for d in pt.dominoes]
    covered: set[tuple[int, int]] = set()
    for d in moved:
        for cell in d.cells():
            if cell in covered:
                raise ShuffleError(f"shuffled dominoes overlap at {cell}")
            if not in_diamond(new_order, *cell):
                raise ShuffleError(f"shuffled domino {tuple(d)} leaves the order-{new_order} diamond")
            covered.add(cell)
    holes = _find_holes(new_order, covered)
    for h in holes:
        if not is_odd_block(new_order, new_coloring, h):
            raise ShuffleError(f"hole at {h} is not an odd block")
    return PartialTiling(new_order, new_coloring, frozenset(moved), frozenset(holes))


def shuffle_map(pt: PartialTiling) -> PartialTiling:
    """Order n-1 (even coloring) to order n (odd coloring)."""
    if pt.coloring is not Coloring.EVEN:
        raise ShuffleError("shuffle_map expects the even coloring of the smaller diamond")
    return _shift(pt, pt.order + 1, Coloring.ODD)


def unshuffle_map(pt: PartialTiling) -> PartialTiling:
    """Inverse of :func:`shuffle_map` (shuffling is an involution)."""
    if pt.coloring is not Coloring.ODD or pt.order < 1:
        raise ShuffleError("unshuffle_map expects the odd coloring of an order >= 1 diamond")
    return _shift(pt, pt.order - 1, Coloring.EVEN)


def pair_holes(
    k: int, old: Iterable[tuple[int, int]], new: Iterable[tuple[int, int]]
) -> tuple[list[tuple[int, int]], dict[tuple[int, int], tuple[int, int]]]:
    """Fresh new holes (one per column, ascending) and the map new hole -> old hole."""
    old_idx = {hole_index(k, c) for c in old}
    new_idx = {hole_index(k, c) for c in new}
    if old_idx & new_idx:
        raise ShuffleError("a block position is a hole both before and after the stage")
    fresh, carried = [], {}
    for j in range(1, k + 1):
        pending = None
        first = None
        for i in range(1, k + 1):
            if (i, j) in old_idx:
                if pending is not None or first is None:
                    raise ShuffleError(f"holes do not alternate in column {j}")
                pending = (i, j)
            elif (i, j) in new_idx:
                if first is None:
                    first = (i, j)
                    fresh.append(hole_center(k, i, j))
                elif pending is not None:
                    carried[hole_center(k, i, j)] = hole_center(k, *pending)
                    pending = None
                else:
                    raise ShuffleError(f"holes do not alternate in column {j}")
        if first is None or pending is not None:
            raise ShuffleError(f"holes do not alternate in column {j}")
    return fresh, carried


def _take(bits: Iterator[int], k: int) -> list[int]:
    out = []
    for _ in range(k):
        try:
            b = int(next(bits))
        except StopIteration:
            raise BitsExhausted(f"bit source ran out during stage {k}") from None
        if b not in (0, 1):
            raise ShuffleError(f"bit {b!r} is not 0 or 1")
        out.append(b)
    return out


def expand_random(t: Tiling, block_choices: Iterable[int]) -> Tiling:
    """One shuffling stage; ``block_choices`` supplies the k fresh-hole bits."""
    k = t.order + 1
    reduced, removed = reduce(t, Coloring.EVEN)
    grown = shuffle_map(reduced)
    fresh, carried = pair_holes(k, reduced.holes, grown.holes)
    old_fill = {b.center: b.fill for b in removed}
    fills = {dst: old_fill[src] for dst, src in carried.items()}
    for c, bit in zip(fresh, _take(iter(block_choices), k)):
        fills[c] = "V" if bit else "H"
    return grown.complete(fills)


def empty_tiling() -> Tiling:
    return Tiling(0, np.zeros((0, 0), dtype=np.int8))


def bit_length(n: int) -> int:
    return n * (n + 1) // 2


def decode(bits: Sequence[int] | str) -> Tiling:
    """Tiling of order n from a bit string of length n(n+1)/2."""
    if isinstance(bits, str):
        bits = [int(ch) for ch in bits.strip()]
    n = order_from_length(len(bits))
    src = iter(bits)
    t = empty_tiling()
    for k in range(1, n + 1):
        t = expand_random(t, _take(src, k))
    return t


def order_from_length(length: int) -> int:
    n = int(((8 * length + 1) ** 0.5 - 1) / 2)
    while bit_length(n) < length:
        n += 1
    if bit_length(n) != length:
        raise ShuffleError(f"bit string length {length} is not of the form n(n+1)/2")
    return n


def encode(t: Tiling) -> list[int]:
    """Inverse of :func:`decode`."""
    stages: list[list[int]] = []
    while t.order > 0:
        k = t.order
        grown, blocks = reduce(t, Coloring.ODD)
        reduced = unshuffle_map(grown)
        fresh, carried = pair_holes(k, reduced.holes, grown.holes)
        fill = {b.center: b.fill for b in blocks}
        stages.append([int(fill[c] == "V") for c in fresh])
        t = reduced.complete({src: fill[dst] for dst, src in carried.items()})
    return [b for stage in reversed(stages) for b in stage]


def format_bits(bits: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in bits) + "\n"


def parse_bits(text: str) -> list[int]:
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise ShuffleError("bit file may contain only 0 and 1")
    return [int(ch) for ch in text]


# ---------------------------------------------------------------------------
# compiled path

_REMOVED_H, _REMOVED_V, _REMOVED_REST = 5, 6, 7


@numba.njit(cache=True)
def _paint_block(g, off, x, y, vertical):
    i, j = y - 1 + off, x - 1 + off
    if vertical:
        g[i, j] = V_SOUTH
        g[i + 1, j] = V_NORTH
        g[i, j + 1] = V_SOUTH
        g[i + 1, j + 1] = V_NORTH
    else:
        g[i, j] = H_WEST
        g[i, j + 1] = H_EAST
        g[i + 1, j] = H_WEST
        g[i + 1, j + 1] = H_EAST


@numba.njit(cache=True)
def _half_width(k, b):
    return k - b if b >= 0 else k + b + 1


@numba.njit(cache=True)
def _stage(cur, nxt, n, k, bits, pos, pending, seen):
    """Grow the order-(k-1) tiling in ``cur`` into ``nxt``; returns 0 or an error code."""
    off = n
    for b in range(-k, k):
        w = _half_width(k, b)
        nxt[b + off, off - w : off + w] = EMPTY
    # one sweep: mark odd blocks (lower-left cell white) and slide everything else
    for b in range(-(k - 1), k - 1):
        w = _half_width(k - 1, b)
        i = b + off
        for a in range(-w, w):
            j = a + off
            c = cur[i, j]
            white = ((a + b - k + 1) & 1) == 0
            if c == H_WEST:
                if white and cur[i + 1, j] == H_WEST:
                    cur[i, j] = _REMOVED_H
                    cur[i + 1, j] = _REMOVED_REST
                    continue
                ni = i + 1 if white else i - 1
                if nxt[ni, j] != EMPTY or nxt[ni, j + 1] != EMPTY:
                    return 1
                nxt[ni, j] = H_WEST
                nxt[ni, j + 1] = H_EAST
            elif c == V_SOUTH:
                if white and cur[i, j + 1] == V_SOUTH:
                    cur[i, j] = _REMOVED_V
                    cur[i, j + 1] = _REMOVED_REST
                    continue
                # parity is read from the upper cell, whose colour is the opposite
                nj = j + 1 if white else j - 1
                if nxt[i, nj] != EMPTY or nxt[i + 1, nj] != EMPTY:
                    return 1
                nxt[i, nj] = V_SOUTH
                nxt[i + 1, nj] = V_NORTH
    # Visit the index grid row by row from the top, so each column is walked
    # downwards. An empty upper-right cell starts a hole: the only other block
    # that could own it lies one row higher and has been filled already.
    pending[: k + 1] = -1
    seen[: k + 1] = 0
    for y in range(k - 1, -k, -1):
        jlo = 1 if y < 0 else 1 + y
        jhi = k + y if y < 0 else k
        for col in range(jlo, jhi + 1):
            x = -k - 1 + 2 * col - y
            i, j = y - 1 + off, x - 1 + off
            old = EMPTY
            if abs(2 * x - 1) + abs(2 * y - 1) <= 2 * (k - 1):
                old = cur[i, j]
            if old == _REMOVED_H or old == _REMOVED_V:
                if pending[col] != -1 or seen[col] == 0:
                    return 3
                pending[col] = 1 if old == _REMOVED_V else 0
            elif nxt[i + 1, j + 1] == EMPTY:
                if nxt[i, j] != EMPTY or nxt[i, j + 1] != EMPTY or nxt[i + 1, j] != EMPTY:
                    return 2
                if seen[col] == 0:
                    seen[col] = 1
                    _paint_block(nxt, off, x, y, bits[pos + col - 1] != 0)
                elif pending[col] != -1:
                    _paint_block(nxt, off, x, y, pending[col] == 1)
                    pending[col] = -1
                else:
                    return 3
    for col in range(1, k + 1):
        if pending[col] != -1 or seen[col] == 0:
            return 3
    return 0


@numba.njit(cache=True)
def _decode_kernel(n, bits, out, scratch):
    cur, nxt = out, scratch
    pending = np.empty(n + 1, dtype=np.int8)
    seen = np.empty(n + 1, dtype=np.int8)
    pos = 0
    for k in range(1, n + 1):
        err = _stage(cur, nxt, n, k, bits, pos, pending, seen)
        if err != 0:
            return err
        pos += k
        cur, nxt = nxt, cur
    if n % 2 == 1:
        # the final order sits in ``scratch``; copy it back into ``out``
        out[:, :] = scratch
    return 0


_KERNEL_ERRORS = {
    1: "shuffled dominoes overlap",
    2: "uncovered cells do not split into 2x2 holes",
    3: "old and new holes do not alternate along a column",
}


def decode_grid(n: int, bits: np.ndarray) -> Tiling:
    """Compiled :func:`decode`; ``bits`` is a uint8 array of length n(n+1)/2."""
    bits = np.ascontiguousarray(bits, dtype=np.uint8)
    if bits.shape != (bit_length(n),):
        raise ShuffleError(f"need {bit_length(n)} bits for order {n}, got {bits.size}")
    out = np.zeros((2 * n, 2 * n), dtype=np.int8)
    scratch = np.zeros((2 * n, 2 * n), dtype=np.int8)
    err = _decode_kernel(n, bits, out, scratch)
    if err:
        raise ShuffleError(_KERNEL_ERRORS[err])
    del scratch
    return Tiling(n, out)


def _parse_weight(xw) -> Fraction:
    xw = Fraction(xw)
    if xw < 0:
        raise ValueError("the vertical weight must be nonnegative")
    return xw


def draw_bits(n: int, seed: int | None, xw=1) -> np.ndarray:
    """n(n+1)/2 independent bits, each 1 with probability xw/(1+xw) exactly."""
    return draw_bits_flat(bit_length(n), seed, xw)


def draw_bits_flat(size: int, seed: int | None, xw=1) -> np.ndarray:
    xw = _parse_weight(xw)
    rng = np.random.default_rng(seed)
    if xw == 1:
        return rng.integers(0, 2, size=size, dtype=np.uint8)
    num, den = xw.numerator, xw.denominator
    return (rng.integers(0, num + den, size=size) < num).astype(np.uint8)


def sample_uniform(n: int, seed: int | None = None) -> Tiling:
    if n < 0:
        raise ValueError("order must be nonnegative")
    return decode_grid(n, draw_bits(n, seed))


def sample_weighted(n: int, xw, seed: int | None = None) -> Tiling:
    """Tiling drawn with probability proportional to xw ** v(T)."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return decode_grid(n, draw_bits(n, seed, xw))


@numba.njit(cache=True)
def _decode_batch(n, bits, out):
    scratch = np.zeros((2 * n, 2 * n), dtype=np.int8)
    for s in range(bits.shape[0]):
        scratch[:, :] = 0
        err = _decode_kernel(n, bits[s], out[s], scratch)
        if err != 0:
            return err
    return 0


def sample_batch(n: int, count: int, seed: int | None = None, xw=1) -> np.ndarray:
    """``count`` independent samples as a ``(count, 2n, 2n)`` int8 array of cell codes.

    All bits come from one generator, row by row, so sample s uses bits
    ``s * N .. (s + 1) * N - 1`` with N = n(n+1)/2.
    """
    if n < 0 or count < 0:
        raise ValueError("order and count must be nonnegative")
    bits = draw_bits_flat(bit_length(n) * count, seed, xw).reshape(count, bit_length(n))
    out = np.zeros((count, 2 * n, 2 * n), dtype=np.int8)
    err = _decode_batch(n, bits, out)
    if err:
        raise ShuffleError(_KERNEL_ERRORS[err])
    return out


def r_weight(n: int, d: Domino) -> int:
    """Rank contribution of one domino (zero for horizontal ones).

    ``(i, j)`` is the upper-left corner of the vertical domino.
    """
    if d.orient == "H":
        return 0
    i, j = d.a, d.b + 2
    return (-1) ** ((i + j + n) % 2) * (i + n + 1)


def r_weight_table(n: int) -> dict[Domino, int]:
    """r(d) for every vertical domino inside the order-n diamond."""
    table = {}
    for b in range(-n, n - 1):
        for a in range(-n, n):
            if in_diamond(n, a, b) and in_diamond(n, a, b + 1):
                table[Domino(a, b, "V")] = r_weight(n, Domino(a, b, "V"))
    return table


def rank_by_dominoes(t: Tiling) -> int:
    return sum(r_weight(t.order, d) for d in t.dominoes if d.orient == "V")

