"""Exact arithmetic, permutation utilities, and polynomial bases.

Everything in this module is exact: counts are Python ints and formula
intermediates are fractions.Fraction. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence, Union


# ----------------------------------------------------------------------
# Elementary exact functions
# ----------------------------------------------------------------------


def double_factorial(m: int) -> int:
    """Odd double factorial: 1*3*...*m for odd m >= 1; 1 for m in {-1, 0}."""
    if m in (-1, 0):
        return 1
    if m < -1 or m % 2 == 0:
        raise ValueError(f"double_factorial needs odd m >= 1 or m in {{-1, 0}}, got {m}")
    return prod(range(1, m + 1, 2))


def binomial(n: int, k: int) -> int:
    """C(n, k) with the zero-outside-range convention: 0 unless 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(part!); 0 when any part is negative."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        return 0
    result = factorial(sum(parts))
    for p in parts:
        result //= factorial(p)
    return result


def inv_factorial(n: int) -> Fraction:
    """1/n! as an exact fraction, with 1/n! = 0 for n < 0 so sums self-truncate."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def cycle_count(perm: Sequence[int]) -> int:
    """Number of disjoint cycles of a permutation given as an image table on 0..n-1."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("cycle_count requires a bijection on 0..n-1")
    seen = bytearray(n)
    count = 0
    for i in range(n):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
    return count


# ----------------------------------------------------------------------
# Pairings and the two-row ground set
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Pairing:
    """Fixed-point-free involution on 0..n-1, stored as a partner table.

    partner[partner[i]] == i and partner[i] != i for every i.
    """

    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.partner)
        if n % 2 != 0:
            raise ValueError("pairing needs an even ground size")
        for i, p in enumerate(self.partner):
            if not 0 <= p < n:
                raise ValueError(f"partner[{i}]={p} out of range")
            if p == i:
                raise ValueError(f"fixed point at {i}")
            if self.partner[p] != i:
                raise ValueError(f"not an involution at {i}")

    @property
    def ground_size(self) -> int:
        return len(self.partner)

    def __getitem__(self, i: int) -> int:
        return self.partner[i]

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Yield the pairs (i, partner[i]) with i < partner[i], in order of i."""
        for i, p in enumerate(self.partner):
            if i < p:
                yield (i, p)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Pairing":
        pairs = list(pairs)
        n = 2 * len(pairs)
        partner = [-1] * n
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n) or partner[a] != -1 or partner[b] != -1:
                raise ValueError(f"bad pair ({a}, {b})")
            partner[a] = b
            partner[b] = a
        return cls(tuple(partner))


@dataclass(frozen=True)
class TwoRowGround:
    """Ground set with p1 row-1 elements followed by p2 row-2 elements.

    Element (row, pos) with 1-based pos is linearized to 0..p1+p2-1; the
    canonical cycle permutation has one cycle per row.
    """

    p1: int
    p2: int

    def __post_init__(self) -> None:
        if self.p1 < 1 or self.p2 < 1:
            raise ValueError("row sizes must be positive")
        if (self.p1 + self.p2) % 2 != 0:
            raise ValueError("p1 + p2 must be even")

    @property
    def size(self) -> int:
        return self.p1 + self.p2

    def row(self, i: int) -> int:
        return 1 if i < self.p1 else 2

    def index(self, row: int, pos: int) -> int:
        """Linear index of element (row, pos), pos counted from 1."""
        if row == 1:
            if not 1 <= pos <= self.p1:
                raise ValueError(f"position {pos} outside row 1")
            return pos - 1
        if row == 2:
            if not 1 <= pos <= self.p2:
                raise ValueError(f"position {pos} outside row 2")
            return self.p1 + pos - 1
        raise ValueError(f"row must be 1 or 2, got {row}")

    def gamma(self) -> tuple[int, ...]:
        """Image table of the canonical cycle permutation (one cycle per row)."""
        p1, p2 = self.p1, self.p2
        return tuple((i + 1) % p1 for i in range(p1)) + tuple(
            p1 + (i + 1) % p2 for i in range(p2)
        )

    def gamma_inv(self) -> tuple[int, ...]:
        p1, p2 = self.p1, self.p2
        return tuple((i - 1) % p1 for i in range(p1)) + tuple(
            p1 + (i - 1) % p2 for i in range(p2)
        )

    def is_mixed(self, i: int, j: int) -> bool:
        """True when elements i and j lie in different rows."""
        return (i < self.p1) != (j < self.p1)


@dataclass(frozen=True)
class CycleCountVector:
    """Exact tallies a_L of pairings whose face permutation has L cycles.

    d is the total number of pairs; counts[L-1] holds a_L for L = 1..d+1.
    """

    d: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.d + 1:
            raise ValueError(f"need d+1 = {self.d + 1} entries, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")

    def a(self, L: int) -> int:
        if 1 <= L <= self.d + 1:
            return self.counts[L - 1]
        return 0

    def total(self) -> int:
        return sum(self.counts)

    def to_poly(self) -> "MonomialPoly":
        """Generating polynomial: coefficient a_L at degree L."""
        return MonomialPoly({L: c for L, c in enumerate(self.counts, start=1)})

    @classmethod
    def from_tally(cls, d: int, tally: dict[int, int]) -> "CycleCountVector":
        return cls(d, tuple(tally.get(L, 0) for L in range(1, d + 2)))


# ----------------------------------------------------------------------
# Polynomials in the binomial and monomial bases
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _binomial_basis_monomials(k: int) -> tuple[Fraction, ...]:
    """Monomial coefficients of C(x, k) = x(x-1)...(x-k+1)/k!, degree 0..k."""
    coeffs = [1]
    for t in range(k):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= c * t
        coeffs = nxt
    kf = factorial(k)
    return tuple(Fraction(c, kf) for c in coeffs)


@dataclass
class BinomialPoly:
    """Integer combination of binomial-basis terms C(x, k) with k >= 1."""

    coeffs: dict[int, int]

    def __post_init__(self) -> None:
        clean = {}
        for k, c in self.coeffs.items():
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"binomial-basis index must be an int >= 1, got {k!r}")
            if c != 0:
                clean[k] = c
        self.coeffs = clean

    def eval(self, x: int) -> int:
        return sum(c * binomial(x, k) for k, c in self.coeffs.items())

    def to_monomial(self) -> "MonomialPoly":
        acc: dict[int, Fraction] = {}
        for k, c in self.coeffs.items():
            for deg, m in enumerate(_binomial_basis_monomials(k)):
                if m:
                    acc[deg] = acc.get(deg, Fraction(0)) + c * m
        return MonomialPoly(acc)


@dataclass
class MonomialPoly:
    """Polynomial in the monomial basis with exact rational coefficients."""

    coeffs: dict[int, Fraction]

    def __post_init__(self) -> None:
        clean = {}
        for deg, c in self.coeffs.items():
            if not isinstance(deg, int) or deg < 0:
                raise ValueError(f"degree must be an int >= 0, got {deg!r}")
            c = Fraction(c)
            if c != 0:
                clean[deg] = c
        self.coeffs = clean

    def eval(self, x: int) -> Fraction:
        return sum((c * x**deg for deg, c in self.coeffs.items()), Fraction(0))

    def integer_coeffs(self) -> dict[int, int]:
        """Coefficients as ints; raises if any coefficient is not integral."""
        out = {}
        for deg, c in self.coeffs.items():
            if c.denominator != 1:
                raise ValueError(f"coefficient of degree {deg} is not an integer: {c}")
            out[deg] = c.numerator
        return out


PolyLike = Union[BinomialPoly, MonomialPoly]


def binomial_to_monomial(p: BinomialPoly) -> MonomialPoly:
    """Exact expansion of a binomial-basis polynomial into the monomial basis."""
    return p.to_monomial()


def poly_eval(p: PolyLike, x: int) -> Union[int, Fraction]:
    """Exact value of a polynomial in either basis at an integer point."""
    return p.eval(x)
