from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aztec.asm import Asm, anti_identity_asm, asm_pair_from_tiling, enumerate_asm, identity_asm
from aztec.enumeration import all_tilings
from aztec.ice import (
    ALPHA,
    BETA,
    IceError,
    IceState,
    asm_from_ice,
    check_ice,
    enumerate_ice,
    format_ice,
    ice_from_asm,
    ice_from_types,
    k_vector,
    parse_ice,
    partition_function,
)
from aztec.lattice import v_stat
from aztec.poly import Poly

ASMS = {n: list(enumerate_asm(n)) for n in range(1, 6)}
CONV_A = Asm([[0, 0, 1, 0], [0, 1, -1, 1], [1, 0, 0, 0], [0, 0, 1, 0]])


def test_small_states():
    s = ice_from_asm(Asm([[1]]))
    assert s.types() == ((5,),)
    assert asm_from_ice(s) == Asm([[1]])
    # two arrows in from the sides, two out through top and bottom
    assert s.east == ((True, False),) and s.north == ((True,), (False,))
    assert sum(row.count(6) for row in ice_from_asm(CONV_A).types()) == 1


def test_two_by_two_zero_classes():
    k = k_vector(identity_asm(2))
    assert k.k5 == 2 and k.k3 + k.k4 == 2 and k.k1 == k.k2 == 0
    k = k_vector(anti_identity_asm(2))
    assert k.k5 == 2 and k.k1 + k.k2 == 2 and k.k3 == k.k4 == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_bijection_and_counts(n):
    states = list(enumerate_ice(n))
    assert len(states) == len(set(states)) == len(ASMS[n])
    for A, s in zip(ASMS[n], states):
        check_ice(s)
        assert asm_from_ice(s) == A
        assert ice_from_types(s.types()) == s
        assert parse_ice(format_ice(s)) == s
        k = k_vector(A)
        assert Counter(t for row in s.types() for t in row) == Counter(
            {t: c for t, c in zip(range(1, 7), k) if c}
        )
        assert sum(k) == n * n and k.k5 - k.k6 == n


def test_invalid_states():
    with pytest.raises(IceError):
        parse_ice("12\n34\n")
    with pytest.raises(IceError):
        parse_ice("7\n")
    with pytest.raises(IceError):
        ice_from_types([[1]])  # boundary arrows point the wrong way
    bad = IceState(1, ((True, True),), ((True,), (False,)))
    with pytest.raises(IceError):
        check_ice(bad)


def test_single_vertex_partition_function():
    assert partition_function(1, (2, 3, 5, 7, 11, 13)) == 11


@pytest.mark.parametrize("abc", [(3, 4, 5), (6, 8, 10), (5, 12, 13)])
@pytest.mark.parametrize("n", range(1, 6))
def test_free_fermion_values(abc, n):
    a, b, c = abc
    assert partition_function(n, (a, a, b, b, c, c)) == c ** (n * n)


@pytest.mark.parametrize("n", range(1, 5))
def test_partition_function_is_the_tiling_polynomial_in_x_squared(n):
    (x,) = Poly.gens("x")
    z = partition_function(n, (x, x, 1, 1, 1 + x**2, 1))
    assert z == (1 + x**2) ** (n * (n + 1) // 2)


def _per_asm_weight(A: Asm, heavy: tuple[int, int]) -> Poly:
    (x,) = Poly.gens("x")
    k = k_vector(A)
    return x ** (k[heavy[0] - 1] + k[heavy[1] - 1]) * (1 + x**2) ** k.k5


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weight_class_matches_tilings_asm_by_asm(n):
    """Tilings sharing an ASM A carry total weight x^(k1+k2) (1+x^2)^k5 in x^(2v)."""
    (x,) = Poly.gens("x")
    by_asm: dict[Asm, Poly] = {}
    for t in all_tilings(n):
        A = asm_pair_from_tiling(t).A
        by_asm[A] = by_asm.get(A, Poly(("x",))) + x ** (2 * v_stat(t))
    assert all(by_asm[A] == _per_asm_weight(A, ALPHA) for A in ASMS[n])
    # the other class gives the same total but the wrong split
    assert any(by_asm[A] != _per_asm_weight(A, BETA) for A in ASMS[n])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_scaling_all_weights(n):
    x, b = Poly.gens("x", "b")
    w = (x, x, 1, 1, 1 + x**2, 1)
    assert partition_function(n, tuple(b * wi for wi in w)) == b ** (n * n) * partition_function(n, w)


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(ASMS[n])))
def test_transposed_matrix_reverses_arrows_consistently(A):
    s = ice_from_asm(A)
    At = Asm([list(col) for col in zip(*A.entries)])
    # transposition swaps the roles of types 3 and 4 and keeps the rest
    swap = {1: 1, 2: 2, 3: 4, 4: 3, 5: 5, 6: 6}
    assert ice_from_asm(At).types() == tuple(zip(*[[swap[t] for t in row] for row in s.types()]))
