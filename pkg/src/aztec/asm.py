"""
Alternating sign matrices, skewed summations, and the correspondence between
tilings of the order-n diamond and compatible pairs (A, B) with A of size n
and B of size n + 1.

Matrix indices in this module are 0-based in code; ``A'``/``B'`` position
``(i, j)`` sits at vertex ``(-n + i + j, j - i)`` (odd vertices) and
``(-n - 1 + i + j, j - i)`` (even vertices) respectively.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .height import HeightFunction, OUTSIDE, check_height_function, heights_from_tiling, HeightError
from .lattice import Tiling
from .config import check_bound


class AsmError(ValueError):
    pass


def _freeze(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class Asm:
    entries: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]], check: bool = True):
        object.__setattr__(self, "entries", _freeze(rows))
        if check:
            _check_asm(self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __str__(self) -> str:
        return format_matrix(self.entries)


def _check_asm(rows: tuple[tuple[int, ...], ...]) -> None:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise AsmError("matrix is not square")
    cols = list(zip(*rows)) if n else []
    for kind, lines in (("row", rows), ("column", cols)):
        for k, line in enumerate(lines):
            s = 0
            for v in line:
                if v not in (-1, 0, 1):
                    raise AsmError(f"entry {v} in {kind} {k} is not in {{-1, 0, 1}}")
                s += v
                if s not in (0, 1):
                    raise AsmError(f"signs do not alternate in {kind} {k}")
            if s != 1:
                raise AsmError(f"{kind} {k} sums to {s}, not 1")


@dataclass(frozen=True)
class SkewSum:
    entries: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        object.__setattr__(self, "entries", _freeze(rows))

    @property
    def size(self) -> int:
        """Size n of the underlying ASM (the matrix itself is (n+1) x (n+1))."""
        return len(self.entries) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __str__(self) -> str:
        return format_matrix(self.entries)


@dataclass(frozen=True)
class AsmPair:
    A: Asm
    B: Asm


def skewed_summation(A: Asm) -> SkewSum:
    n = A.size
    S = [[0] * (n + 1) for _ in range(n + 1)]
    corner = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            corner[i][j] = A.entries[i - 1][j - 1] + corner[i - 1][j] + corner[i][j - 1] - corner[i - 1][j - 1]
    for i in range(n + 1):
        for j in range(n + 1):
            S[i][j] = i + j - 2 * corner[i][j]
    return SkewSum(S)


def check_skew_sum(S: SkewSum) -> None:
    rows = S.entries
    n = len(rows) - 1
    if n < 0 or any(len(r) != n + 1 for r in rows):
        raise AsmError("skewed summation must be a nonempty square matrix")
    for i in range(n + 1):
        if rows[i][0] != i or rows[0][i] != i or rows[i][n] != n - i or rows[n][i] != n - i:
            raise AsmError(f"border of skewed summation is wrong at index {i}")
    for i in range(n + 1):
        for j in range(n + 1):
            if i < n and abs(rows[i + 1][j] - rows[i][j]) != 1:
                raise AsmError(f"entries ({i},{j}) and ({i + 1},{j}) do not differ by 1")
            if j < n and abs(rows[i][j + 1] - rows[i][j]) != 1:
                raise AsmError(f"entries ({i},{j}) and ({i},{j + 1}) do not differ by 1")


def inverse_skew(S: SkewSum) -> Asm:
    check_skew_sum(S)
    s = S.entries
    n = S.size
    rows = []
    for i in range(1, n + 1):
        rows.append([(s[i - 1][j] + s[i][j - 1] - s[i - 1][j - 1] - s[i][j]) // 2 for j in range(1, n + 1)])
    return Asm(rows)


def n_plus(A: Asm) -> int:
    return sum(v == 1 for row in A.entries for v in row)


def n_minus(A: Asm) -> int:
    return sum(v == -1 for row in A.entries for v in row)


def odd_vertex(n: int, i: int, j: int) -> tuple[int, int]:
    """Vertex of entry (i, j) of A' (0 <= i, j <= n)."""
    return (-n + i + j, j - i)


def even_vertex(n: int, i: int, j: int) -> tuple[int, int]:
    """Vertex of entry (i, j) of B' (0 <= i, j <= n + 1)."""
    return (-n - 1 + i + j, j - i)


def asm_pair_from_heights(h: HeightFunction) -> AsmPair:
    n = h.order
    a_star = [[(h[odd_vertex(n, i, j)] - 1) // 2 for j in range(n + 1)] for i in range(n + 1)]
    b_star = [[h[even_vertex(n, i, j)] // 2 for j in range(n + 2)] for i in range(n + 2)]
    return AsmPair(inverse_skew(SkewSum(a_star)), inverse_skew(SkewSum(b_star)))


def asm_pair_from_tiling(t: Tiling) -> AsmPair:
    return asm_pair_from_heights(heights_from_tiling(t))


def _sizes(A: Asm, B: Asm) -> int:
    if B.size != A.size + 1:
        raise AsmError(f"sizes {A.size} and {B.size} do not form a pair (need n and n+1)")
    return A.size


def heights_from_asm_pair(A: Asm, B: Asm) -> HeightFunction:
    """Interleave 2A*+1 (odd vertices) and 2B* (even vertices); no legality check."""
    n = _sizes(A, B)
    r = n + 1
    H = np.full((2 * r + 1, 2 * r + 1), OUTSIDE, dtype=np.int64)
    a_star = skewed_summation(A).entries
    b_star = skewed_summation(B).entries
    for i in range(n + 1):
        for j in range(n + 1):
            x, y = odd_vertex(n, i, j)
            H[y + r, x + r] = 2 * a_star[i][j] + 1
    for i in range(n + 2):
        for j in range(n + 2):
            x, y = even_vertex(n, i, j)
            H[y + r, x + r] = 2 * b_star[i][j]
    return HeightFunction(n, H)


def compatible(A: Asm, B: Asm) -> bool:
    """Whether the interleaved heights obey the step rule on every edge."""
    try:
        check_height_function(heights_from_asm_pair(A, B))
    except HeightError:
        return False
    return True


def table_allowed(a_nw: int, a_ne: int, a_sw: int, a_se: int) -> set[int]:
    """Admissible b'_{ij} given the surrounding 2x2 block of A'.

    Positions refer to the matrix layout: a'_{i-1,j-1}, a'_{i-1,j}, a'_{i,j-1}, a'_{ij}.
    """
    return {a_nw - 1, a_nw + 3} & {a_ne - 3, a_ne + 1} & {a_sw - 3, a_sw + 1} & {a_se - 1, a_se + 3}


def compatible_table(A: Asm, B: Asm) -> bool:
    """Compatibility read off the table of 2x2 submatrices of A'."""
    n = _sizes(A, B)
    a1 = [[2 * v + 1 for v in row] for row in skewed_summation(A).entries]
    b1 = [[2 * v for v in row] for row in skewed_summation(B).entries]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            allowed = table_allowed(a1[i - 1][j - 1], a1[i - 1][j], a1[i][j - 1], a1[i][j])
            if b1[i][j] not in allowed:
                return False
    return True


def tiling_from_asm_pair(p: AsmPair | tuple[Asm, Asm]) -> Tiling:
    from .height import tiling_from_heights

    A, B = (p.A, p.B) if isinstance(p, AsmPair) else p
    h = heights_from_asm_pair(A, B)
    try:
        return tiling_from_heights(h)
    except HeightError as exc:
        raise AsmError(f"incompatible pair: {exc}") from exc


def enumerate_asm(n: int) -> Iterator[Asm]:
    """Every n x n ASM once, generated through complete monotone triangles."""
    from .monotone import asm_from_triangle, complete_triangles

    check_bound("asm", n)
    for m in complete_triangles(n):
        yield asm_from_triangle(m)


def asm_leq(A1: Asm, A2: Asm) -> bool:
    if A1.size != A2.size:
        raise AsmError(f"size mismatch: {A1.size} vs {A2.size}")
    s1 = skewed_summation(A1).entries
    s2 = skewed_summation(A2).entries
    return all(u <= v for r1, r2 in zip(s1, s2) for u, v in zip(r1, r2))


def identity_asm(n: int) -> Asm:
    return Asm([[int(i == j) for j in range(n)] for i in range(n)])


def anti_identity_asm(n: int) -> Asm:
    return Asm([[int(i + j == n - 1) for j in range(n)] for i in range(n)])


def format_matrix(rows: Sequence[Sequence[int]]) -> str:
    return "".join(" ".join(str(v) for v in row) + "\n" for row in rows)


def parse_matrices(text: str) -> list[list[list[int]]]:
    """Blank-line separated integer matrices."""
    blocks: list[list[list[int]]] = [[]]
    for line in text.splitlines():
        if line.strip():
            blocks[-1].append([int(tok) for tok in line.split()])
        elif blocks[-1]:
            blocks.append([])
    return [b for b in blocks if b]


def parse_asm(text: str) -> Asm:
    mats = parse_matrices(text)
    if len(mats) != 1:
        raise AsmError(f"expected one matrix, found {len(mats)}")
    return Asm(mats[0])
