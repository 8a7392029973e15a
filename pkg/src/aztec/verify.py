"""
Named identity checks grouped into suites.

Each check takes the largest order to try and raises :class:`CheckFailed`
with the first counterexample. Orders are clipped to what each brute-force
oracle can afford.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import asm as asm_mod
from . import ice, monotone, poset, shuffle
from .enumeration import ad_poly_brute, ad_poly_product, all_tilings, flip_distance
from .height import descend_to_min, rank
from .lattice import Coloring, canonical_tiling, v_stat
from .poly import Poly

SUITES = ("theorem", "asm", "monotone", "poset", "shuffle", "ice")


class CheckFailed(AssertionError):
    pass


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    run: Callable[[int], None]
    cap: int  # largest order the check is ever run at


@dataclass(frozen=True)
class Outcome:
    check: Check
    order: int
    ok: bool
    detail: str
    seconds: float


REGISTRY: list[Check] = []


def check(suite: str, name: str, cap: int):
    def wrap(fn: Callable[[int], None]):
        REGISTRY.append(Check(suite, name, fn, cap))
        return fn

    return wrap


def expect(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


# theorem ---------------------------------------------------------------------


@check("theorem", "tiling count is 2^(n(n+1)/2)", 5)
def _count(m: int) -> None:
    for n in range(1, m + 1):
        got = len(all_tilings(n))
        expect(got == 2 ** (n * (n + 1) // 2), f"order {n}: {got} tilings")


@check("theorem", "AD(n;x,q) by enumeration equals the product formula", 4)
def _poly(m: int) -> None:
    for n in range(1, m + 1):
        b, p = ad_poly_brute(n), ad_poly_product(n)
        expect(b == p, f"order {n}: enumeration gives {b}, product gives {p}")


@check("theorem", "rank of the all-vertical tiling is n(n+1)(2n+1)/6", 8)
def _rank_max(m: int) -> None:
    for n in range(1, m + 1):
        r = rank(canonical_tiling(n, "all_vertical"))
        expect(r == n * (n + 1) * (2 * n + 1) // 6, f"order {n}: rank {r}")


@check("theorem", "rank equals flip distance from the all-horizontal tiling", 3)
def _rank_flip(m: int) -> None:
    for n in range(1, m + 1):
        for t in all_tilings(n):
            expect(rank(t) == flip_distance(t), f"order {n}: {t.dominoes}")


@check("theorem", "greedy descent reaches the minimum in rank-many moves", 4)
def _descent(m: int) -> None:
    for n in range(1, m + 1):
        for t in all_tilings(n):
            expect(len(descend_to_min(t)) == rank(t), f"order {n}: {t.dominoes}")


# asm -------------------------------------------------------------------------

ASM_COUNTS = [1, 1, 2, 7, 42, 429, 7436]


@check("asm", "number of ASMs is 1, 2, 7, 42, 429", 5)
def _asm_count(m: int) -> None:
    for n in range(1, m + 1):
        got = sum(1 for _ in asm_mod.enumerate_asm(n))
        expect(got == ASM_COUNTS[n], f"size {n}: {got}")


@check("asm", "sums of 2^N+ and 2^N- over ASMs", 5)
def _asm_sums(m: int) -> None:
    for n in range(1, m + 1):
        As = list(asm_mod.enumerate_asm(n))
        plus = sum(2 ** asm_mod.n_plus(A) for A in As)
        minus = sum(2 ** asm_mod.n_minus(A) for A in As)
        expect(plus == 2 ** (n * (n + 1) // 2), f"size {n}: sum 2^N+ = {plus}")
        expect(minus == 2 ** (n * (n - 1) // 2), f"size {n}: sum 2^N- = {minus}")
        expect(all(asm_mod.n_plus(A) - asm_mod.n_minus(A) == n for A in As), f"size {n}: N+ - N- != n")


@check("asm", "A has 2^N+(A) compatible partners and B has 2^N-(B)", 4)
def _completions(m: int) -> None:
    for n in range(1, m + 1):
        As, Bs = list(asm_mod.enumerate_asm(n)), list(asm_mod.enumerate_asm(n + 1))
        table = {(A, B): asm_mod.compatible(A, B) for A in As for B in Bs}
        for A in As:
            c = sum(table[A, B] for B in Bs)
            expect(c == 2 ** asm_mod.n_plus(A), f"A =\n{A}has {c} partners")
        for B in Bs:
            c = sum(table[A, B] for A in As)
            expect(c == 2 ** asm_mod.n_minus(B), f"B =\n{B}has {c} partners")


@check("asm", "height and 2x2-table compatibility agree", 4)
def _compat_routes(m: int) -> None:
    for n in range(1, m + 1):
        for A in asm_mod.enumerate_asm(n):
            for B in asm_mod.enumerate_asm(n + 1):
                expect(
                    asm_mod.compatible(A, B) == asm_mod.compatible_table(A, B),
                    f"routes disagree on\n{A}\n{B}",
                )


@check("asm", "tilings and compatible pairs round-trip", 4)
def _pair_roundtrip(m: int) -> None:
    for n in range(1, m + 1):
        for t in all_tilings(n):
            p = asm_mod.asm_pair_from_tiling(t)
            expect(asm_mod.compatible(p.A, p.B), f"order {n}: pair not compatible")
            expect(asm_mod.tiling_from_asm_pair(p) == t, f"order {n}: round trip fails")


@check("asm", "skewed summation round-trips", 5)
def _skew(m: int) -> None:
    for n in range(1, m + 1):
        for A in asm_mod.enumerate_asm(n):
            expect(asm_mod.inverse_skew(asm_mod.skewed_summation(A)) == A, f"\n{A}")


@check("asm", "tiling order matches the order on both ASMs", 3)
def _order(m: int) -> None:
    from .height import leq

    for n in range(1, m + 1):
        ts = all_tilings(n)
        pairs = {t: asm_mod.asm_pair_from_tiling(t) for t in ts}
        for s, t in itertools.product(ts, ts):
            ps, pt = pairs[s], pairs[t]
            both = asm_mod.asm_leq(ps.A, pt.A) and asm_mod.asm_leq(ps.B, pt.B)
            expect(leq(s, t) == both, f"order {n}: disagreement")


# monotone --------------------------------------------------------------------


@check("monotone", "ASMs and complete monotone triangles correspond", 5)
def _tri(m: int) -> None:
    for n in range(1, m + 1):
        count = 0
        for A in asm_mod.enumerate_asm(n):
            count += 1
            expect(monotone.asm_from_triangle(monotone.triangle_from_asm(A)) == A, f"\n{A}")
        expect(count == sum(1 for _ in monotone.complete_triangles(n)), f"size {n}")


@check("monotone", "weights of complete triangles sum to 1", 5)
def _weights(m: int) -> None:
    for n in range(1, m + 1):
        total = sum((monotone.triangle_weight(t) for t in monotone.complete_triangles(n)), Fraction(0))
        expect(total == 1, f"size {n}: {total}")


@check("monotone", "W(1..n) = 1 by the recurrence", 6)
def _w_unit(m: int) -> None:
    for n in range(1, m + 1):
        w = monotone.w_recurrence(tuple(range(1, n + 1)))
        expect(w == 1, f"n={n}: {w}")


@check("monotone", "recurrence, product and determinant forms of W agree", 5)
def _w_forms(m: int) -> None:
    rng = random.Random(20240101)
    for _ in range(100):
        k = rng.randint(2, max(2, m))
        a = tuple(rng.randint(-10, 10) for _ in range(k))
        expect(monotone.w_recurrence(a) == monotone.w_closed(a), f"{a}")
        b = tuple(sorted(rng.sample(range(-10, 11), k)))
        expect(monotone.w_det(b) == monotone.w_closed(b), f"{b}")


@check("monotone", "weighted triangle sums equal W", 5)
def _w_brute(m: int) -> None:
    rng = random.Random(7)
    for _ in range(20):
        k = rng.randint(1, max(1, min(m, 4)))
        a = tuple(sorted(rng.sample(range(1, 9), k)))
        expect(monotone.sum_weights_over_bottom(a) == monotone.w_closed(a), f"{a}")


@check("monotone", "tilings above the zigzag path count 2^(...) W(a)", 4)
def _paths(m: int) -> None:
    from .enumeration import count_tilings

    for n, variant in itertools.product(range(1, m + 1), "AB"):
        top = n if variant == "A" else n + 1
        for k in range(1, top + 1):
            for a in itertools.combinations(range(1, n + 1), k):
                got = count_tilings(monotone.path_region(n, k, a, variant))
                e = k * (k + 1) // 2 if variant == "A" else k * (k - 1) // 2
                want = 2**e * monotone.w_closed(a)
                expect(got == want, f"n={n} variant {variant} a={a}: {got} != {want}")


@check("monotone", "product formula matches the ASM count", 5)
def _mrr(m: int) -> None:
    for n in range(1, m + 1):
        expect(monotone.count_complete_product(n) == ASM_COUNTS[n], f"size {n}")


# poset -----------------------------------------------------------------------


@check("poset", "order ideals of the whole poset count the tilings", 4)
def _ideals(m: int) -> None:
    for n in range(1, m + 1):
        got = poset.count_ideals("whole", n)
        expect(got == 2 ** (n * (n + 1) // 2), f"order {n}: {got}")


@check("poset", "odd and even parts have |A_n| and |A_(n+1)| ideals", 4)
def _parts(m: int) -> None:
    for n in range(1, m + 1):
        expect(poset.count_ideals("odd", n) == ASM_COUNTS[n], f"odd part, order {n}")
        expect(poset.count_ideals("even", n) == ASM_COUNTS[n + 1], f"even part, order {n}")


@check("poset", "heights and ideals round-trip", 3)
def _ideal_rt(m: int) -> None:
    from .height import heights_from_tiling

    for n in range(1, m + 1):
        for t in all_tilings(n):
            h = heights_from_tiling(t)
            ideal = poset.ideal_from_heights(h)
            expect(len(ideal) == rank(t), f"order {n}: ideal size")
            expect(poset.heights_from_ideal(n, ideal) == h, f"order {n}: round trip")


@check("poset", "compatibility through ideals agrees with the 2x2 table", 3)
def _ideal_compat(m: int) -> None:
    for n in range(1, m + 1):
        for A in asm_mod.enumerate_asm(n):
            for B in asm_mod.enumerate_asm(n + 1):
                expect(poset.compatible_via_ideals(A, B) == asm_mod.compatible_table(A, B), f"\n{A}\n{B}")


# shuffle ---------------------------------------------------------------------


def _all_bits(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((0, 1), repeat=n * (n + 1) // 2)


@check("shuffle", "decode and encode are inverse bijections", 4)
def _codec(m: int) -> None:
    for n in range(1, m + 1):
        seen = set()
        for bits in _all_bits(n):
            t = shuffle.decode(bits)
            seen.add(t)
            expect(shuffle.encode(t) == list(bits), f"bits {bits}")
            expect(sum(bits) == v_stat(t), f"bits {bits}: popcount differs from v")
        expect(len(seen) == 2 ** (n * (n + 1) // 2), f"order {n}: decode not injective")
        for t in all_tilings(n):
            expect(shuffle.decode(shuffle.encode(t)) == t, f"order {n}: {t.dominoes}")


@check("shuffle", "vertical counts are binomially distributed", 5)
def _binomial(m: int) -> None:
    for n in range(1, m + 1):
        c = Counter(v_stat(t) for t in all_tilings(n))
        N = n * (n + 1) // 2
        expect(c == Counter({v: comb(N, v) for v in range(N + 1)}), f"order {n}: {dict(c)}")


@check("shuffle", "compiled and reference decoders agree", 4)
def _kernel(m: int) -> None:
    for n in range(1, m + 1):
        for bits in _all_bits(n):
            arr = np.array(bits, dtype=np.uint8)
            expect(shuffle.decode_grid(n, arr) == shuffle.decode(bits), f"bits {bits}")


@check("shuffle", "domino rank weights sum to the rank", 4)
def _rweights(m: int) -> None:
    for n in range(1, m + 1):
        for t in all_tilings(n):
            expect(shuffle.rank_by_dominoes(t) == rank(t), f"order {n}: {t.dominoes}")


@check("shuffle", "holes before and after a stage are the -1s and +1s of B", 4)
def _holes(m: int) -> None:
    for n in range(1, m + 1):
        for t in all_tilings(n):
            red, _ = shuffle.reduce(t, Coloring.EVEN)
            grown = shuffle.shuffle_map(red)
            B = asm_mod.asm_pair_from_tiling(t).B
            k = n + 1
            minus = {(i + 1, j + 1) for i in range(k) for j in range(k) if B.entries[i][j] == -1}
            plus = {(i + 1, j + 1) for i in range(k) for j in range(k) if B.entries[i][j] == 1}
            expect({shuffle.hole_index(k, c) for c in red.holes} == minus, f"order {n}: old holes")
            expect({shuffle.hole_index(k, c) for c in grown.holes} == plus, f"order {n}: new holes")


# ice -------------------------------------------------------------------------


@check("ice", "ice states and ASMs correspond", 5)
def _ice_bij(m: int) -> None:
    for n in range(1, m + 1):
        for A in asm_mod.enumerate_asm(n):
            s = ice.ice_from_asm(A)
            expect(ice.asm_from_ice(s) == A, f"\n{A}")
            k = ice.k_vector(A)
            expect(sum(k) == n * n and k.k5 - k.k6 == n, f"k = {k}")


@check("ice", "free-fermion weights give Z = c^(n^2)", 5)
def _free(m: int) -> None:
    for a, b, c in ((3, 4, 5), (6, 8, 10), (5, 12, 13)):
        for n in range(1, m + 1):
            z = ice.partition_function(n, (a, a, b, b, c, c))
            expect(z == c ** (n * n), f"(a,b,c)=({a},{b},{c}), n={n}: Z={z}")


@check("ice", "Z(x,x,1,1,1+x^2,1) = (1+x^2)^(n(n+1)/2)", 4)
def _adx2(m: int) -> None:
    (x,) = Poly.gens("x")
    for n in range(1, m + 1):
        z = ice.partition_function(n, (x, x, 1, 1, 1 + x**2, 1))
        expect(z == (1 + x**2) ** (n * (n + 1) // 2), f"n={n}: Z={z}")


@check("ice", "scaling all weights by b scales Z by b^(n^2)", 4)
def _scaling(m: int) -> None:
    x, b = Poly.gens("x", "b")
    w = (x, x, 1, 1, 1 + x**2, 1)
    for n in range(1, m + 1):
        lhs = ice.partition_function(n, tuple(b * wi for wi in w))
        expect(lhs == b ** (n * n) * ice.partition_function(n, w), f"n={n}")


@check("ice", "moving weight from type 5 to type 6 by a square root", 4)
def _sqrt_trade(m: int) -> None:
    # With w5 = w6 = s and s^2 = 1 + x^2, k5 = n + k6 gives Z' = s^n * inner,
    # so Z'^2 = (1 + x^2)^n * inner^2 is a polynomial and no square root is needed.
    (x,) = Poly.gens("x")
    s2 = 1 + x**2
    for n in range(1, m + 1):
        z = ice.partition_function(n, (x, x, 1, 1, s2, 1))
        inner = Poly(("x",))
        for A in asm_mod.enumerate_asm(n):
            k = ice.k_vector(A)
            inner = inner + x ** (k.k1 + k.k2) * s2**k.k6
        zprime_sq = s2**n * inner * inner
        expect(z * z == s2**n * zprime_sq, f"n={n}")


# driver ----------------------------------------------------------------------


def checks_for(suite: str) -> list[Check]:
    if suite == "all":
        return list(REGISTRY)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [c for c in REGISTRY if c.suite == suite]


def run_suite(suite: str, max_order: int) -> Iterator[Outcome]:
    for c in checks_for(suite):
        order = min(max_order, c.cap)
        start = time.perf_counter()
        try:
            c.run(order)
        except CheckFailed as exc:
            yield Outcome(c, order, False, str(exc), time.perf_counter() - start)
            continue
        yield Outcome(c, order, True, "", time.perf_counter() - start)
