"""
The three-dimensional poset whose order ideals are the tilings of the
order-n diamond, its split into the parts sitting over odd and even vertices,
and exact ideal counting.

An element ``(x, y, z)`` stands for one lowering step available at vertex
``(x, y)``: a height function H contains it iff ``z < H(x, y)``.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .asm import Asm, AsmError, even_vertex, odd_vertex, skewed_summation
from .config import check_bound
from .height import HeightFunction, max_heights, min_heights
from .lattice import grid_vertices, vertex_parity

Point = tuple[int, int, int]

PARTS = ("whole", "even", "odd")


class IdealError(ValueError):
    def __init__(self, message: str, cover: tuple[Point, Point] | None = None):
        super().__init__(message)
        self.cover = cover


@dataclass
class Poset:
    """Elements plus their lower covers; ``step`` is the z-gap of a cover."""

    order: int
    part: str
    step: int
    elements: list[Point]
    lower: dict[Point, list[Point]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Point) -> bool:
        return p in self.lower

    def layers(self) -> list[list[Point]]:
        by_z: dict[int, list[Point]] = defaultdict(list)
        for p in self.elements:
            by_z[p[2]].append(p)
        return [by_z[z] for z in sorted(by_z)]


def _points(n: int, parity: str | None) -> list[Point]:
    lo, hi = min_heights(n), max_heights(n)
    pts = []
    for x, y in grid_vertices(n):
        if parity is not None and vertex_parity(n, (x, y)) != parity:
            continue
        pts.extend((x, y, z) for z in range(lo[x, y], hi[x, y] - 3, 4))
    return sorted(pts, key=lambda p: (p[2], p[1], p[0]))


def build_poset(n: int, part: str = "whole") -> Poset:
    if part not in PARTS:
        raise ValueError(f"part must be one of {PARTS}")
    if n < 0:
        raise ValueError("order must be nonnegative")
    pts = _points(n, None if part == "whole" else part)
    present = set(pts)
    if part == "whole":
        step, nbrs = 1, ((1, 0), (-1, 0), (0, 1), (0, -1))
    else:
        step, nbrs = 2, ((1, 1), (1, -1), (-1, 1), (-1, -1))
    lower = {
        p: [q for dx, dy in nbrs if (q := (p[0] + dx, p[1] + dy, p[2] - step)) in present] for p in pts
    }
    return Poset(n, part, step, pts, lower)


def ideal_from_heights(H: HeightFunction, part: str = "whole") -> frozenset[Point]:
    P = build_poset(H.order, part)
    return frozenset(p for p in P.elements if p[2] < H[p[0], p[1]])


def find_violation(P: Poset, ideal: Iterable[Point]) -> tuple[Point, Point] | None:
    s = set(ideal)
    for p in s:
        if p not in P:
            return (p, p)
        for q in P.lower[p]:
            if q not in s:
                return (p, q)
    return None


def is_down_set(P: Poset, ideal: Iterable[Point]) -> bool:
    return find_violation(P, ideal) is None


def heights_from_ideal(n: int, ideal: Iterable[Point]) -> HeightFunction:
    ideal = set(ideal)
    P = build_poset(n)
    bad = find_violation(P, ideal)
    if bad is not None:
        p, q = bad
        if p == q:
            raise IdealError(f"{p} is not an element of the poset", bad)
        raise IdealError(f"{p} is in the set but the element {q} below it is not", bad)
    values = np.array(min_heights(n).values)
    r = n + 1
    for x, y, _ in ideal:
        values[y + r, x + r] += 4
    return HeightFunction(n, values)


def count_ideals(part: str, n: int) -> int:
    """Number of down-sets, by dynamic programming over z-layers.

    Every cover joins consecutive layers, so a down-set is a chain of layer
    subsets in which each chosen element has all its lower covers chosen.
    """
    check_bound("poset", n)
    P = build_poset(n, part)
    states: dict[frozenset, int] = {frozenset(): 1}
    for layer in P.layers():
        new: dict[frozenset, int] = defaultdict(int)
        for chosen, count in states.items():
            free = [p for p in layer if all(q in chosen for q in P.lower[p])]
            for k in range(len(free) + 1):
                for sub in combinations(free, k):
                    new[frozenset(sub)] += count
        states = dict(new)
    return sum(states.values())


def enumerate_ideals(P: Poset) -> list[frozenset[Point]]:
    """All down-sets, explicitly (small posets only)."""
    out: list[frozenset[Point]] = [frozenset()]
    for layer in P.layers():
        grown = []
        for base in out:
            free = [p for p in layer if all(q in base for q in P.lower[p])]
            for k in range(len(free) + 1):
                for sub in combinations(free, k):
                    grown.append(base | frozenset(sub))
        out = grown
    return out


def compatible_via_ideals(A: Asm, B: Asm) -> bool:
    """Whether the down-sets of A (odd part) and B (even part) union to a down-set."""
    if B.size != A.size + 1:
        raise AsmError(f"sizes {A.size} and {B.size} do not form a pair (need n and n+1)")
    n = A.size
    a_star = skewed_summation(A).entries
    b_star = skewed_summation(B).entries
    hA = {odd_vertex(n, i, j): 2 * a_star[i][j] + 1 for i in range(n + 1) for j in range(n + 1)}
    hB = {even_vertex(n, i, j): 2 * b_star[i][j] for i in range(n + 2) for j in range(n + 2)}
    P = build_poset(n)
    heights = hA | hB
    union = {p for p in P.elements if p[2] < heights[p[0], p[1]]}
    return is_down_set(P, union)
