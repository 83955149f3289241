"""Closed-form counting formulas, all in exact arithmetic.

Each formula mirrors its displayed form: intermediates are exact rationals
and the final value is asserted integral (and non-negative where it counts
something). The brute-force module provides the matching oracles.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Mapping

from .arrays import SubstructureGamma, SubstructureOmega, check_full, classify_columns, is_irreducible
from .exact import (
    BinomialPoly,
    CycleCountVector,
    binomial,
    double_factorial,
    inv_factorial,
    multinomial,
)


def _as_count(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{context}: expected an exact integer, got {value}")
    n = value.numerator
    if n < 0:
        raise ArithmeticError(f"{context}: expected a non-negative count, got {n}")
    return n


# ----------------------------------------------------------------------
# Generating series for one- and two-vertex maps
# ----------------------------------------------------------------------


def hz_series(q: int) -> BinomialPoly:
    """Harer-Zagier series for one-vertex maps with q edges.

    Coefficient of C(x, k) is (2q-1)!! * 2^(k-1) * C(q, k-1) for k = 1..q+1.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    lead = double_factorial(2 * q - 1)
    return BinomialPoly(
        {k: lead * 2 ** (k - 1) * binomial(q, k - 1) for k in range(1, q + 2)}
    )


def gs_series(q1: int, q2: int, s: int) -> BinomialPoly:
    """Goulden-Slofstra series for two-vertex maps with q_i loops and s links.

    Triple sum over k, i, j with the bracket
    C(k-1, q1-i) C(k-1, q2-j) - C(k-1, q1+s-i) C(k-1, q2+s-j); terms with
    d-i-j < 0 vanish by the reciprocal-factorial convention.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if q1 < 0 or q2 < 0:
        raise ValueError("q1 and q2 must be non-negative")
    p1, p2 = 2 * q1 + s, 2 * q2 + s
    d = q1 + q2 + s
    lead = factorial(p1) * factorial(p2)
    coeffs: dict[int, Fraction] = {}
    for k in range(1, d + 2):
        acc = Fraction(0)
        for i in range(p1 // 2 + 1):
            for j in range(p2 // 2 + 1):
                weight = inv_factorial(d - i - j)
                if not weight:
                    continue
                choose = binomial(d - i - j, k - 1)
                if not choose:
                    continue
                delta = binomial(k - 1, q1 - i) * binomial(k - 1, q2 - j) - binomial(
                    k - 1, q1 + s - i
                ) * binomial(k - 1, q2 + s - j)
                if not delta:
                    continue
                acc += Fraction(choose * delta, 2 ** (i + j) * factorial(i) * factorial(j)) * weight
        value = lead * acc
        if value:
            if value.denominator != 1:
                raise ArithmeticError(f"series coefficient at k={k} is not integral: {value}")
            coeffs[k] = value.numerator
    return BinomialPoly(coeffs)


def gs_series_simplified(q1: int, q2: int, s: int) -> BinomialPoly:
    """Two-sum form of the two-vertex series (the g1 - g2 reduction).

    Sums over t1 <= q1+s and t2 <= q2+s, contributing to C(x, d-t1-t2+1);
    negative factorial arguments zero out terms.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if q1 < 0 or q2 < 0:
        raise ValueError("q1 and q2 must be non-negative")
    p1, p2 = 2 * q1 + s, 2 * q2 + s
    d = q1 + q2 + s
    lead = factorial(p1) * factorial(p2)
    coeffs: dict[int, Fraction] = {}
    for t1 in range(q1 + s + 1):
        for t2 in range(q2 + s + 1):
            mid = inv_factorial(d - t1 - t2)
            if not mid:
                continue
            k = d - t1 - t2 + 1
            bracket = inv_factorial(q1) * inv_factorial(q2) * inv_factorial(
                s + q1 - t1
            ) * inv_factorial(s + q2 - t2) - inv_factorial(q1 + s) * inv_factorial(
                q2 + s
            ) * inv_factorial(q1 - t1) * inv_factorial(q2 - t2)
            if not bracket:
                continue
            term = (
                Fraction(factorial(d - t1) * factorial(d - t2) * lead)
                * mid
                * bracket
                / (2 ** (t1 + t2) * factorial(t1) * factorial(t2))
            )
            coeffs[k] = coeffs.get(k, Fraction(0)) + term
    out: dict[int, int] = {}
    for k, value in coeffs.items():
        if value:
            if value.denominator != 1:
                raise ArithmeticError(f"series coefficient at k={k} is not integral: {value}")
            out[k] = value.numerator
    return BinomialPoly(out)


def series_from_surjections(f: Mapping[int, int]) -> BinomialPoly:
    """Series with coefficient f_K at C(x, K), from paired-surjection counts."""
    return BinomialPoly(dict(f))


# ----------------------------------------------------------------------
# Array-count formulas
# ----------------------------------------------------------------------


def vertical_count_formula(K: int, R1: int, R2: int, s: int) -> int:
    """Closed form for the number of proper vertical arrays."""
    if K < 1 or R1 < 1 or R2 < 1 or s < 1:
        raise ValueError("need K, R1, R2, s >= 1")
    ratio = Fraction(
        factorial(s + R1 - 1) * factorial(s + R2 - 1), factorial(s + R1 + R2 - 2)
    )
    bracket = binomial(K - 1, R1 - 1) * binomial(K - 1, R2 - 1) - binomial(
        K - 1, s + R1 - 1
    ) * binomial(K - 1, s + R2 - 1)
    value = ratio * binomial(s + R1 + R2 - 2, K - 1) * bracket
    return _as_count(value, f"vertical_count_formula({K}, {R1}, {R2}, {s})")


def gamma_count_formula(g: SubstructureGamma) -> int:
    """Arrays satisfying an irreducible full substructure, from its column tally.

    Three branches depending on how the vertex count s compares with the
    number A of doubly-unmarked arrow-free columns: zero when s <= A, a
    single product when s = A+1, and the two-term bracket otherwise.
    """
    if g.s < 1:
        raise ValueError("the substructure must carry at least one vertex per row")
    if not is_irreducible(g):
        raise ValueError("substructure must be irreducible")
    if not check_full(g):
        raise ValueError("substructure must satisfy the full condition")
    t = classify_columns(g)
    s = g.s
    if s <= t.A:
        return 0
    first = (t.b2 + t.d2) * (t.atil1 + t.c1 + t.ctil1 + t.d1)
    if s == t.A + 1:
        return factorial(s - 1) * first
    second = t.b1 * (t.c2 + t.cbar2 + t.ctil2) - t.cbar1 * (t.b2 + t.d2)
    value = factorial(s - 1) * (
        Fraction(first, s - t.A) + Fraction(second, (s - t.A) * (s - t.A - 1))
    )
    return _as_count(value, "gamma_count_formula")


def gamma_count_formula_noarrows(g: SubstructureGamma) -> int:
    """Arrow-free version of the substructure count; full condition not needed.

    Here A counts the columns with no marked cell and at least one vertex in
    each row, and only the mark pattern of the other columns enters.
    """
    if g.arrows:
        raise ValueError("this formula needs an empty arrow map")
    if g.s < 1:
        raise ValueError("the substructure must carry at least one vertex per row")
    w1, w2 = g.w
    s = g.s
    A = b1 = b2 = c1 = c2 = d1 = d2 = 0
    for j in range(g.K):
        m1, m2 = j in g.r1, j in g.r2
        if m1 and m2:
            d1 += w1[j]
            d2 += w2[j]
        elif m1:
            b1 += w1[j]
            b2 += w2[j]
        elif m2:
            c1 += w1[j]
            c2 += w2[j]
        elif w1[j] > 0 and w2[j] > 0:
            A += 1
    if s <= A:
        return 0
    first = Fraction((b2 + d2) * (c1 + d1), s - A)
    if s == A + 1:
        return _as_count(factorial(s - 1) * first, "gamma_count_formula_noarrows")
    value = factorial(s - 1) * (first + Fraction(b1 * c2, (s - A) * (s - A - 1)))
    return _as_count(value, "gamma_count_formula_noarrows")


def omega_count_formula(o: SubstructureOmega) -> int:
    """Proper vertical arrays with a fixed balanced occupancy.

    s! times a sum over the number A of doubly-unmarked occupied columns,
    with a multinomial that distributes the remaining columns among the
    three marked patterns; negative multinomial parts vanish.
    """
    s, K, F = o.s, o.K, o.F
    acc = Fraction(0)
    for A in range(s):
        spread = multinomial((K - A - o.r1, K - A - o.r2, o.r1 + o.r2 - K + A - 1))
        if not spread:
            continue
        choose = binomial(F - 1, A) if F >= 1 else 0
        if not choose:
            continue
        acc += Fraction(s, s - A) * choose * spread
    return _as_count(factorial(s) * acc, "omega_count_formula")


def canonical_from_vertical(
    K: int, q1: int, q2: int, s: int, v_source: Callable[[int, int, int, int], int]
) -> int:
    """Canonical-array count assembled from vertical-array counts.

    Sums over the numbers t_i of within-row pairs removed entirely, weighting
    v(K, q1-t1+1, q2-t2+1, s) by the ways of re-inserting those pairs.
    """
    if s < 1:
        raise ValueError("s must be positive")
    p1, p2 = 2 * q1 + s, 2 * q2 + s
    lead = factorial(p1) * factorial(p2)
    acc = Fraction(0)
    for t1 in range(q1 + 1):
        for t2 in range(q2 + 1):
            weight = Fraction(
                lead,
                2 ** (t1 + t2)
                * factorial(t1)
                * factorial(t2)
                * factorial(s + q1 - t1)
                * factorial(s + q2 - t2),
            )
            acc += weight * v_source(K, q1 - t1 + 1, q2 - t2 + 1, s)
    return _as_count(acc, f"canonical_from_vertical({K}, {q1}, {q2}, {s})")


# ----------------------------------------------------------------------
# Genus reindexing
# ----------------------------------------------------------------------


def genus_counts(v: CycleCountVector, n_vertices: int, d_edges: int) -> dict[int, int]:
    """Map each face count L with a_L > 0 to its genus (2 - V + E - L) / 2."""
    if n_vertices not in (1, 2):
        raise ValueError("n_vertices must be 1 or 2")
    if v.d != d_edges:
        raise ValueError(f"cycle counts are for {v.d} edges, not {d_edges}")
    out: dict[int, int] = {}
    for L in range(1, v.d + 2):
        a = v.a(L)
        if a == 0:
            continue
        twice_genus = 2 - n_vertices + d_edges - L
        if twice_genus < 0 or twice_genus % 2 != 0:
            raise ValueError(f"parity violation at L={L}: corrupted cycle counts")
        out[twice_genus // 2] = a
    return out
