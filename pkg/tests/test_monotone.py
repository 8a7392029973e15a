from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from aztec.asm import Asm, enumerate_asm, identity_asm
from aztec.enumeration import count_tilings
from aztec.lattice import diamond_cells
from aztec.monotone import (
    MonotoneTriangle,
    TriangleError,
    asm_from_triangle,
    bareiss_det,
    complete_triangles,
    count_complete_product,
    format_triangle,
    gen_binomial,
    parse_triangle,
    path_region,
    starred_sum,
    sum_weights_over_bottom,
    triangle_from_asm,
    triangle_weight,
    triangles_with_bottom,
    w_closed,
    w_det,
    w_recurrence,
    zigzag_path,
)

SKEW_EXAMPLE = Asm([[0, 1, 0, 0], [1, -1, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]])
SKEW_TRIANGLE = MonotoneTriangle([(2,), (1, 3), (1, 3, 4), (1, 2, 3, 4)])


def test_triangle_examples():
    assert triangle_from_asm(SKEW_EXAMPLE) == SKEW_TRIANGLE
    assert asm_from_triangle(SKEW_TRIANGLE) == SKEW_EXAMPLE
    assert triangle_from_asm(identity_asm(2)).rows == ((1,), (1, 2))
    assert triangle_weight(MonotoneTriangle([(7,)])) == 1
    assert triangle_weight(MonotoneTriangle([(1,), (1, 2)])) == Fraction(1, 2)
    assert parse_triangle(format_triangle(SKEW_TRIANGLE)) == SKEW_TRIANGLE


def test_invalid_triangles():
    for rows in ([(1, 1)], [(2,), (1, 2, 3)], [(1,), (2, 3)], [(3,), (1, 2)]):
        with pytest.raises(TriangleError):
            MonotoneTriangle(rows)


@pytest.mark.parametrize("n", range(1, 6))
def test_asm_triangle_bijection(n):
    asms = list(enumerate_asm(n))
    tris = list(complete_triangles(n))
    assert len(tris) == len(asms) == count_complete_product(n)
    assert {triangle_from_asm(A) for A in asms} == set(tris)
    assert all(asm_from_triangle(triangle_from_asm(A)) == A for A in asms)
    assert sum((triangle_weight(t) for t in tris), Fraction(0)) == 1


def test_starred_sum_examples():
    one = lambda _: 1  # noqa: E731
    assert starred_sum(one, 1, 3) == 2
    assert starred_sum(one, 4, 4) == 0
    assert starred_sum(one, 3, 1) == -2


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.lists(st.integers(-5, 5), min_size=41, max_size=41))
def test_starred_sum_is_additive_over_intervals(r, s, t, table):
    f = lambda i: table[i + 20]  # noqa: E731
    assert starred_sum(f, r, s) + starred_sum(f, s, t) == starred_sum(f, r, t)
    assert starred_sum(f, r, s) == -starred_sum(f, s, r)


def test_w_examples():
    assert w_closed((1, 2, 3)) == 1
    assert w_closed((1, 3, 5)) == 8
    assert w_closed((5, 2)) == -3
    assert w_recurrence((5, 2)) == -3
    assert w_det((1, 2)) == 1 and w_det((1, 3)) == 2
    assert sum_weights_over_bottom((1, 3)) == 2
    assert sum_weights_over_bottom((1, 2, 3)) == 1
    assert sum_weights_over_bottom((2, 5, 9)) == w_closed((2, 5, 9)) == 42
    with pytest.raises(ValueError):
        w_closed(())


@pytest.mark.parametrize("n", range(1, 7))
def test_w_of_consecutive_integers(n):
    assert w_recurrence(tuple(range(1, n + 1))) == 1
    assert w_recurrence(tuple(range(5, 5 + n))) == 1


def test_bottom_rows_with_weights_listed():
    tris = list(triangles_with_bottom((1, 3)))
    assert sorted(t.rows[0] for t in tris) == [(1,), (2,), (3,)]
    assert sorted(triangle_weight(t) for t in tris) == [Fraction(1, 2), Fraction(1, 2), 1]


def test_gen_binomial_and_bareiss():
    assert [gen_binomial(5, k) for k in range(7)] == [1, 5, 10, 10, 5, 1, 0]
    assert gen_binomial(-2, 3) == -4
    assert bareiss_det([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 2 * (3 - 2) - 0 + 1 * (1 - 3)
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([]) == 1


arg_tuples = st.lists(st.integers(-10, 10), min_size=2, max_size=5)


def _nested_starred(a: tuple[int, ...]) -> Fraction:
    """The recurrence written out literally, one starred sum per argument."""
    if len(a) == 1:
        return Fraction(1)

    def inner(prefix: tuple[int, ...]) -> Fraction:
        j = len(prefix)
        if j == len(a) - 1:
            return _nested_starred(prefix)
        return starred_sum(lambda b: inner(prefix + (b,)), a[j], a[j + 1])

    return inner(())


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
def test_tabulated_recurrence_equals_literal_nesting(a):
    assert w_recurrence(tuple(a)) == _nested_starred(tuple(a))


@given(arg_tuples)
def test_recurrence_equals_closed_form(a):
    assert w_recurrence(tuple(a)) == w_closed(a)


@given(st.lists(st.integers(-10, 10), min_size=2, max_size=5, unique=True))
def test_determinant_equals_closed_form(a):
    a = sorted(a)
    assert w_det(a) == w_closed(a)


@given(arg_tuples, st.data())
def test_w_is_skew_symmetric(a, data):
    i, j = data.draw(st.integers(0, len(a) - 1)), data.draw(st.integers(0, len(a) - 1))
    assume(i != j)
    b = list(a)
    b[i], b[j] = b[j], b[i]
    assert w_recurrence(tuple(b)) == -w_recurrence(tuple(a))


@given(st.lists(st.integers(1, 8), min_size=1, max_size=4, unique=True))
def test_weighted_brute_force_sum(a):
    a = tuple(sorted(a))
    assert sum_weights_over_bottom(a) == w_closed(a)


def test_path_examples():
    assert count_tilings(path_region(4, 2, (2, 3), "A")) == 8
    assert count_tilings(path_region(4, 2, (2, 3), "B")) == 2
    for n in range(1, 5):
        assert path_region(n, n, tuple(range(1, n + 1)), "A") == frozenset(diamond_cells(n))


def test_zigzag_shape():
    pts = zigzag_path(3, 1, (2,), "A")
    assert pts[0] == (-1, 2) and len(pts) == 7
    assert all(abs(p[0] - q[0]) + abs(p[1] - q[1]) == 1 for p, q in zip(pts, pts[1:]))
    with pytest.raises(ValueError):
        zigzag_path(3, 2, (3, 2), "A")
    with pytest.raises(ValueError):
        zigzag_path(3, 1, (4,), "A")
    with pytest.raises(ValueError):
        zigzag_path(3, 1, (1,), "C")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_path_counts(n):
    for variant in "AB":
        top = n if variant == "A" else n + 1
        for m in range(1, top + 1):
            for a in itertools.combinations(range(1, n + 1), m):
                e = m * (m + 1) // 2 if variant == "A" else m * (m - 1) // 2
                assert count_tilings(path_region(n, m, a, variant)) == 2**e * w_closed(a)
        # with no arguments the product is empty, so the count is 1
        assert count_tilings(path_region(n, 0, (), variant)) == 1


def test_product_formula_values():
    assert [count_complete_product(n) for n in range(1, 8)] == [1, 2, 7, 42, 429, 7436, 218348]
