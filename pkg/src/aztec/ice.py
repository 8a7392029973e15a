"""
Square ice with Aztec (domain-wall) boundary: arrows point inwards on the left
and right sides and outwards on the top and bottom.

An n x n ASM becomes an ice state by turning each edge of its skewed summation
(directed from the smaller entry to the larger) a quarter turn counterclockwise.
Vertex types, read off the 2x2 block of skewed-summation entries around each
vertex:

====  ==========================  =====================
type  arrows through the vertex    ASM entry
====  ==========================  =====================
1     right and up                0
2     left and down               0
3     right and down              0
4     left and up                 0
5     in at both sides            +1
6     out at both sides           -1
====  ==========================  =====================

Types 1-2 (class alpha) are the zeros that carry the weight ``x`` when the
partition function reproduces the tiling generating function.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .asm import Asm, enumerate_asm, skewed_summation
from .config import check_bound

# (top-right minus top-left, bottom-left minus top-left, bottom-right minus top-left) -> type
_PATTERN_TYPE = {(1, 1, 2): 1, (-1, -1, -2): 2, (-1, 1, 0): 3, (1, -1, 0): 4, (1, 1, 0): 5, (-1, -1, 0): 6}

# type -> (left edge points east, right edge points east, top edge points north, bottom edge points north)
_TYPE_ARROWS = {
    1: (True, True, True, True),
    2: (False, False, False, False),
    3: (True, True, False, False),
    4: (False, False, True, True),
    5: (True, False, True, False),
    6: (False, True, False, True),
}
_ARROWS_TYPE = {v: k for k, v in _TYPE_ARROWS.items()}

ALPHA = (1, 2)
BETA = (3, 4)


class IceError(ValueError):
    pass


class KVector(NamedTuple):
    k1: int
    k2: int
    k3: int
    k4: int
    k5: int
    k6: int


@dataclass(frozen=True)
class IceState:
    """Arrow directions on the edges of an n x n grid of vertices.

    ``east[i][c]`` is the horizontal edge left of vertex column ``c`` in row
    ``i`` (``c = n`` is the right boundary); ``north[r][j]`` is the vertical
    edge above vertex row ``r`` in column ``j`` (``r = n`` is the bottom).
    """

    size: int
    east: tuple[tuple[bool, ...], ...]
    north: tuple[tuple[bool, ...], ...]

    def vertex_type(self, i: int, j: int) -> int:
        key = (self.east[i][j], self.east[i][j + 1], self.north[i][j], self.north[i + 1][j])
        try:
            return _ARROWS_TYPE[key]
        except KeyError:
            raise IceError(f"vertex ({i}, {j}) does not have two arrows in and two out") from None

    def types(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.vertex_type(i, j) for j in range(self.size)) for i in range(self.size))

    def __str__(self) -> str:
        return format_ice(self)


def check_ice(s: IceState) -> None:
    n = s.size
    if len(s.east) != n or any(len(r) != n + 1 for r in s.east):
        raise IceError("horizontal edge array has the wrong shape")
    if len(s.north) != n + 1 or any(len(r) != n for r in s.north):
        raise IceError("vertical edge array has the wrong shape")
    for i in range(n):
        if not s.east[i][0] or s.east[i][n]:
            raise IceError(f"row {i}: side arrows must point inwards")
    for j in range(n):
        if not s.north[0][j] or s.north[n][j]:
            raise IceError(f"column {j}: top and bottom arrows must point outwards")
    s.types()


def ice_from_asm(A: Asm) -> IceState:
    n = A.size
    s = skewed_summation(A).entries
    east = tuple(tuple(s[i + 1][c] > s[i][c] for c in range(n + 1)) for i in range(n))
    north = tuple(tuple(s[r][j + 1] > s[r][j] for j in range(n)) for r in range(n + 1))
    return IceState(n, east, north)


def _entry(t: int) -> int:
    return 1 if t == 5 else -1 if t == 6 else 0


def asm_from_ice(s: IceState) -> Asm:
    check_ice(s)
    return Asm([[_entry(t) for t in row] for row in s.types()])


def ice_from_types(types: Sequence[Sequence[int]]) -> IceState:
    """Rebuild arrows from a type grid, checking that neighbours agree."""
    n = len(types)
    east = [[None] * (n + 1) for _ in range(n)]
    north = [[None] * n for _ in range(n + 1)]

    def put(arr, r, c, val, where):
        if arr[r][c] is not None and arr[r][c] != val:
            raise IceError(f"neighbouring vertices disagree on the edge {where}")
        arr[r][c] = val

    for i, row in enumerate(types):
        if len(row) != n:
            raise IceError("type grid is not square")
        for j, t in enumerate(row):
            if t not in _TYPE_ARROWS:
                raise IceError(f"unknown vertex type {t!r}")
            le, re, tn, bn = _TYPE_ARROWS[t]
            put(east, i, j, le, f"left of ({i}, {j})")
            put(east, i, j + 1, re, f"right of ({i}, {j})")
            put(north, i, j, tn, f"above ({i}, {j})")
            put(north, i + 1, j, bn, f"below ({i}, {j})")
    s = IceState(n, tuple(map(tuple, east)), tuple(map(tuple, north)))
    check_ice(s)
    return s


def k_vector(A: Asm) -> KVector:
    n = A.size
    s = skewed_summation(A).entries
    k = [0] * 7
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            base = s[i - 1][j - 1]
            k[_PATTERN_TYPE[(s[i - 1][j] - base, s[i][j - 1] - base, s[i][j] - base)]] += 1
    return KVector(*k[1:])


def enumerate_ice(n: int) -> Iterator[IceState]:
    check_bound("ice", n)
    for A in enumerate_asm(n):
        yield ice_from_asm(A)


def partition_function(n: int, w: Sequence):
    """Sum over ice states of prod w_i ** k_i, exact for int, Fraction or Poly weights."""
    if len(w) != 6:
        raise ValueError("need six vertex weights")
    check_bound("ice", n)
    total = 0
    for A in enumerate_asm(n):
        term = 1
        for wi, ki in zip(w, k_vector(A)):
            if ki:
                term = term * wi**ki
        total = total + term
    return total


def format_ice(s: IceState) -> str:
    return "".join("".join(str(t) for t in row) + "\n" for row in s.types())


def parse_ice(text: str) -> IceState:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    try:
        types = [[int(ch) for ch in row] for row in rows]
    except ValueError:
        raise IceError("ice file may contain only the digits 1-6") from None
    return ice_from_types(types)
