"""
Monotone triangles, their bijection with ASMs, dyadic triangle weights, and
the function W computed three independent ways (iterated starred sums, a
Vandermonde-style product, and a binomial determinant). Also builds the
zigzag regions whose tiling counts are powers of two times W.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod

import numpy as np

from .asm import Asm, AsmError
from .config import check_bound
from .lattice import in_diamond

HALF = Fraction(1, 2)


class TriangleError(ValueError):
    pass


@dataclass(frozen=True)
class MonotoneTriangle:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]], check: bool = True):
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in rows))
        if check:
            _check_triangle(self.rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.rows[-1] if self.rows else ()

    def is_complete(self) -> bool:
        return self.bottom == tuple(range(1, self.size + 1))

    def __str__(self) -> str:
        return format_triangle(self)


def _check_triangle(rows: tuple[tuple[int, ...], ...]) -> None:
    for i, row in enumerate(rows):
        if len(row) != i + 1:
            raise TriangleError(f"row {i + 1} has {len(row)} entries")
        if any(u >= v for u, v in zip(row, row[1:])):
            raise TriangleError(f"row {i + 1} is not strictly increasing")
        if i:
            above = rows[i - 1]
            for j, t in enumerate(above):
                if not row[j] <= t <= row[j + 1]:
                    raise TriangleError(f"diagonal condition fails at row {i}, entry {j + 1}")


def triangle_from_asm(A: Asm) -> MonotoneTriangle:
    n = A.size
    col = [0] * n
    rows = []
    for i in range(n):
        for j in range(n):
            col[j] += A.entries[i][j]
        rows.append([j + 1 for j in range(n) if col[j] == 1])
    return MonotoneTriangle(rows)


def asm_from_triangle(m: MonotoneTriangle) -> Asm:
    if not m.is_complete():
        raise TriangleError(f"bottom row {m.bottom} is not 1..{m.size}")
    n = m.size
    prev: set[int] = set()
    out = []
    for row in m.rows:
        cur = set(row)
        out.append([int(j in cur) - int(j in prev) for j in range(1, n + 1)])
        prev = cur
    try:
        return Asm(out)
    except AsmError as exc:  # unreachable for monotone input
        raise TriangleError(str(exc)) from exc


def repeat_count(m: MonotoneTriangle) -> int:
    return sum(len(set(r) & set(p)) for p, r in zip(m.rows, m.rows[1:]))


def triangle_weight(m: MonotoneTriangle) -> Fraction:
    return HALF ** repeat_count(m)


def _rows_above(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Strictly increasing rows t with row[j] <= t[j] <= row[j+1]."""
    k = len(row) - 1
    cur: list[int] = []

    def rec(j: int):
        if j == k:
            yield tuple(cur)
            return
        lo = row[j] if not cur else max(row[j], cur[-1] + 1)
        for v in range(lo, row[j + 1] + 1):
            cur.append(v)
            yield from rec(j + 1)
            cur.pop()

    yield from rec(0)


def triangles_with_bottom(bottom: Sequence[int]) -> Iterator[MonotoneTriangle]:
    bottom = tuple(bottom)
    if any(u >= v for u, v in zip(bottom, bottom[1:])):
        raise TriangleError("bottom row must be strictly increasing")

    def rec(row: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
        if len(row) <= 1:
            yield [row] if row else []
            return
        for up in _rows_above(row):
            for stack in rec(up):
                yield stack + [row]

    for rows in rec(bottom):
        yield MonotoneTriangle(rows, check=False)


def complete_triangles(n: int) -> Iterator[MonotoneTriangle]:
    check_bound("triangle", n)
    return triangles_with_bottom(range(1, n + 1))


def sum_weights_over_bottom(a: Sequence[int]) -> Fraction:
    """Total weight of all monotone triangles with bottom row ``a`` (brute force)."""
    check_bound("triangle", len(a))
    return sum((triangle_weight(m) for m in triangles_with_bottom(a)), Fraction(0))


def starred_sum(f: Callable[[int], Fraction | int], r: int, s: int) -> Fraction:
    """Half-weighted endpoint sum, extended antisymmetrically to r > s."""
    if r == s:
        return Fraction(0)
    if r > s:
        return -starred_sum(f, s, r)
    total = HALF * (f(r) + f(s))
    for i in range(r + 1, s):
        total += f(i)
    return Fraction(total)


def _starred_antiderivative(f: np.ndarray, axis: int) -> np.ndarray:
    """Twice the starred antiderivative along ``axis``: 2 * sum_{b<x} f(b) + f(x).

    Starred sums are then differences: 2 * sum*_{r..s} f = G(s) - G(r), which
    also covers r = s and the antisymmetric extension to r > s.
    """
    return 2 * np.cumsum(f, axis=axis) - f


@lru_cache(maxsize=None)
def w_recurrence(a: tuple[int, ...]) -> Fraction:
    """W by its defining recurrence of iterated starred sums, with W(a) = 1.

    All arguments ever visited lie in [min a, max a], so W is tabulated on that
    grid one argument count at a time; each starred sum over a box becomes an
    alternating sum of a cumulative table over the box's corners.
    """
    a = tuple(int(v) for v in a)
    if not a:
        raise ValueError("W needs at least one argument")
    k = len(a)
    lo, size = min(a), max(a) - min(a) + 1
    # |W(b)| <= (size-1)^C(m,2) / prod_{j<m} j!, and a table entry sums at most
    # (2 size)^(m-1) such values; stay in int64 while that is safe
    worst = max(
        (size - 1) ** ((m - 1) * (m - 2) // 2) // prod(factorial(j) for j in range(m - 1)) * (2 * size + 2) ** (m - 1)
        for m in range(2, k + 1)
    ) if k > 1 else 0
    dtype = np.int64 if worst < 2**60 else object
    table = np.ones(size, dtype=dtype)  # W of one argument
    for m in range(2, k + 1):
        G = table
        for axis in range(m - 1):
            G = _starred_antiderivative(G, axis)
        if m == k:
            idx = [v - lo for v in a]
            total = sum(
                (-1) ** (m - 1 - sum(eps)) * int(G[tuple(idx[j + e] for j, e in enumerate(eps))])
                for eps in product((0, 1), repeat=m - 1)
            )
            return Fraction(total, 2 ** (m - 1))
        grid = [np.arange(size).reshape([size if d == j else 1 for d in range(m)]) for j in range(m)]
        acc = np.zeros((size,) * m, dtype=dtype)
        for eps in product((0, 1), repeat=m - 1):
            sign = (-1) ** (m - 1 - sum(eps))
            acc = acc + sign * G[tuple(grid[j + e] for j, e in enumerate(eps))]
        table = acc // 2 ** (m - 1)
        if np.any(acc % 2 ** (m - 1) != 0):
            raise ArithmeticError("W took a non-integer value on integer arguments")
    return Fraction(1)


def w_closed(a: Sequence[int]) -> Fraction:
    a = tuple(a)
    if not a:
        raise ValueError("W needs at least one argument")
    out = Fraction(1)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            out *= Fraction(a[j] - a[i], j - i)
    return out


def gen_binomial(a: int, k: int) -> int:
    """a choose k for any integer a (falling factorial over k!)."""
    return prod(a - i for i in range(k)) // factorial(k)


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    m = [list(r) for r in M]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if n else 1


def w_det(a: Sequence[int]) -> int:
    n = len(a)
    return bareiss_det([[gen_binomial(ai, j) for j in range(n)] for ai in a])


def count_complete_product(n: int) -> int:
    """prod_{k<n} (3k+1)!/(n+k)!, the conjectured-then-proved ASM count."""
    num = prod(factorial(3 * k + 1) for k in range(n))
    den = prod(factorial(n + k) for k in range(n))
    return num // den


def zigzag_path(n: int, m: int, a: Sequence[int], variant: str) -> list[tuple[int, int]]:
    """Vertices of the zigzag path below which cells are cut away."""
    a = tuple(a)
    chosen = set(a)
    if variant == "A":
        if not (0 <= m <= n and len(a) == m and (not a or a[-1] <= n)):
            raise ValueError(f"variant A needs m <= n and a_m <= n (n={n}, m={m}, a={a})")
        x, y = -m, n - m
        steps = n
        south_first = lambda j: j in chosen  # noqa: E731
    elif variant == "B":
        if not (0 <= m <= n + 1 and len(a) == m and (not a or a[-1] <= n)):
            raise ValueError(f"variant B needs m <= n+1 and a_m <= n (n={n}, m={m}, a={a})")
        x, y = -m, n + 1 - m
        steps = n + 1
        south_first = lambda j: j not in chosen  # noqa: E731
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if any(u >= v for u, v in zip(a, a[1:])) or (a and a[0] < 1):
        raise ValueError("a must be strictly increasing positive integers")
    pts = [(x, y)]
    for j in range(1, steps + 1):
        order = ("S", "E") if south_first(j) else ("E", "S")
        for step in order:
            if step == "S":
                y -= 1
            else:
                x += 1
            pts.append((x, y))
    return pts


def path_region(n: int, m: int, a: Sequence[int], variant: str = "A") -> frozenset[tuple[int, int]]:
    """Cells of the order-n diamond lying above the zigzag path."""
    pts = zigzag_path(n, m, a, variant)
    east_y = {p[0]: p[1] for p, q in zip(pts, pts[1:]) if q[0] == p[0] + 1}
    x0, x1 = pts[0][0], pts[-1][0]
    cells = set()
    for b in range(-n, n):
        for c in range(-n, n):
            if not in_diamond(n, c, b) or c < x0:
                continue
            if c >= x1 or b >= east_y[c]:
                cells.add((c, b))
    return frozenset(cells)


def format_triangle(m: MonotoneTriangle) -> str:
    return "".join(" ".join(str(v) for v in row) + "\n" for row in m.rows)


def parse_triangle(text: str) -> MonotoneTriangle:
    rows = [[int(t) for t in line.split()] for line in text.splitlines() if line.strip()]
    return MonotoneTriangle(rows)
