from __future__ import annotations

import networkx as nx
import pytest

from aztec.asm import compatible, compatible_table, enumerate_asm, identity_asm
from aztec.enumeration import all_tilings
from aztec.height import heights_from_tiling, max_heights, min_heights, rank
from aztec.lattice import canonical_tiling
from aztec.poset import (
    IdealError,
    build_poset,
    compatible_via_ideals,
    count_ideals,
    enumerate_ideals,
    heights_from_ideal,
    ideal_from_heights,
    is_down_set,
)

ASM_COUNTS = [1, 1, 2, 7, 42, 429, 7436]


def _antichain_count(n: int, part: str) -> int:
    """Down-sets are in bijection with antichains; count those with networkx."""
    P = build_poset(n, part)
    g = nx.DiGraph()
    g.add_nodes_from(P.elements)
    g.add_edges_from((q, p) for p in P.elements for q in P.lower[p])
    return sum(1 for _ in nx.antichains(g))


def test_sizes():
    assert len(build_poset(0)) == 0
    assert build_poset(1).elements == [(0, 0, 0)]
    assert (len(build_poset(3)), len(build_poset(3, "even")), len(build_poset(3, "odd"))) == (14, 10, 4)
    for n in range(1, 7):
        assert len(build_poset(n)) == n * (n + 1) * (2 * n + 1) // 6
        assert len(build_poset(n, "even")) + len(build_poset(n, "odd")) == len(build_poset(n))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("part", ["whole", "even", "odd"])
def test_counts_agree_with_antichain_oracle(n, part):
    assert count_ideals(part, n) == _antichain_count(n, part) == len(enumerate_ideals(build_poset(n, part)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ideal_counts(n):
    assert count_ideals("whole", n) == 2 ** (n * (n + 1) // 2)
    assert count_ideals("odd", n) == ASM_COUNTS[n]
    assert count_ideals("even", n) == ASM_COUNTS[n + 1]


def test_extreme_ideals():
    assert ideal_from_heights(min_heights(2)) == frozenset()
    full = ideal_from_heights(max_heights(2))
    assert full == frozenset(build_poset(2).elements) and len(full) == 5
    assert heights_from_ideal(2, frozenset()) == min_heights(2)
    assert heights_from_ideal(2, full) == max_heights(2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heights_ideals_round_trip(n):
    P = build_poset(n)
    seen = set()
    for t in all_tilings(n):
        h = heights_from_tiling(t)
        ideal = ideal_from_heights(h)
        assert is_down_set(P, ideal)
        assert len(ideal) == rank(t)
        assert heights_from_ideal(n, ideal) == h
        seen.add(ideal)
    assert seen == set(enumerate_ideals(P))


def test_non_ideals_are_reported():
    top = max(build_poset(2).elements, key=lambda p: p[2])
    with pytest.raises(IdealError) as err:
        heights_from_ideal(2, {top})
    assert err.value.cover[0] == top
    with pytest.raises(IdealError):
        heights_from_ideal(2, {(9, 9, 0)})


def test_compatibility_examples():
    assert compatible_via_ideals(identity_asm(1), identity_asm(2))
    bad = [B for B in enumerate_asm(3) if not compatible(identity_asm(2), B)]
    assert bad and not any(compatible_via_ideals(identity_asm(2), B) for B in bad)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ideal_route_agrees_with_table(n):
    for A in enumerate_asm(n):
        for B in enumerate_asm(n + 1):
            assert compatible_via_ideals(A, B) == compatible_table(A, B)


def test_order_one_tilings_as_ideals():
    assert ideal_from_heights(heights_from_tiling(canonical_tiling(1, "all_vertical"))) == {(0, 0, 0)}
