"""Representation-ring bookkeeping.

R(G) is polynomial on the orbit sums of the fundamental weights, with a
Z-basis indexed by dominant weights.  Every count here is graded by the
weight degree of a dominant weight, the sum of its fundamental-weight
coordinates.  The involution permutes dominant weights by permuting
coordinates; a fixed weight gives two irreducibles of G x| Z/2 and a pair of
swapped weights gives one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ContractError, InvalidInputError
from .involutions import Sigma
from .rootdata import CartanType, WeylOrbit, fundamental_weight, weyl_orbit

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class GradedCounts:
    """Nonnegative integers indexed by weight degree 0..bound."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.values):
            raise ValueError(f"negative entry in graded counts {self.values}")

    @classmethod
    def zeros(cls, bound: int) -> "GradedCounts":
        return cls((0,) * (bound + 1))

    @property
    def bound(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, d: int) -> int:
        return self.values[d]

    def _same_length(self, other: "GradedCounts") -> None:
        if len(self) != len(other):
            raise ValueError("graded counts have different bounds")

    def __add__(self, other: "GradedCounts") -> "GradedCounts":
        self._same_length(other)
        return GradedCounts(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "GradedCounts") -> "GradedCounts":
        self._same_length(other)
        return GradedCounts(tuple(a - b for a, b in zip(self, other)))

    def __rmul__(self, k: int) -> "GradedCounts":
        return GradedCounts(tuple(k * a for a in self))

    def tolist(self) -> list[int]:
        return list(self.values)


def _sum_counts(items: Iterable[GradedCounts], bound: int) -> GradedCounts:
    total = GradedCounts.zeros(bound)
    for c in items:
        total = total + c
    return total


@dataclass(frozen=True)
class OrbitSum:
    node: int
    support: WeylOrbit


def orbit_sum(t: CartanType, i: int) -> OrbitSum:
    return OrbitSum(i, weyl_orbit(t, fundamental_weight(t, i)))


def _check_bound(bound: int) -> None:
    if bound < 0:
        raise InvalidInputError(f"grading bound must be >= 0, got {bound}")


def dominant_count(t: CartanType | int, bound: int) -> GradedCounts:
    """Number of dominant weights of each degree: C(d + n - 1, n - 1)."""
    _check_bound(bound)
    n = t if isinstance(t, int) else t.rank
    return GradedCounts(tuple(math.comb(d + n - 1, n - 1) for d in range(bound + 1)))


def _fixed_series(fixed: int, swaps: int, bound: int) -> list[int]:
    # coefficients of 1 / ((1 - x)^fixed (1 - x^2)^swaps)
    c = [1] + [0] * bound
    for _ in range(fixed):
        for d in range(1, bound + 1):
            c[d] += c[d - 1]
    for _ in range(swaps):
        for d in range(2, bound + 1):
            c[d] += c[d - 2]
    return c


def fixed_and_regular_counts(
    t: CartanType | int, sigma: Sigma, bound: int
) -> tuple[GradedCounts, GradedCounts]:
    """Per degree, the sigma-fixed dominant weights and the free sigma-orbits of them."""
    _check_bound(bound)
    n = t if isinstance(t, int) else t.rank
    if sigma.n != n:
        raise ContractError(f"sigma acts on {sigma.n} nodes, rank is {n}")
    f, p = sigma.cycle_type()
    fixed = _fixed_series(f, p, bound)
    dom = dominant_count(n, bound)
    regular = []
    for d in range(bound + 1):
        moved = dom[d] - fixed[d]
        if moved % 2:
            raise ArithmeticError(f"odd number ({moved}) of non-fixed dominant weights in degree {d}")
        regular.append(moved // 2)
    return GradedCounts(tuple(fixed)), GradedCounts(tuple(regular))


def semidirect_basis_counts(t: CartanType | int, sigma: Sigma, bound: int) -> GradedCounts:
    """Graded rank of R(G x| Z/2): two irreducibles per fixed weight, one per free orbit."""
    fixed, regular = fixed_and_regular_counts(t, sigma, bound)
    return 2 * fixed + regular


@dataclass(frozen=True)
class KahlerDescriptor:
    """Exterior algebra on d(u_1), ..., d(u_n) over R(G); entry k of degree_ranks is C(n, k)."""

    rank: int
    generators: tuple[str, ...]
    degree_ranks: tuple[int, ...]

    @property
    def even_rank(self) -> int:
        return sum(self.degree_ranks[0::2])

    @property
    def odd_rank(self) -> int:
        return sum(self.degree_ranks[1::2])


def kahler_descriptor(t: CartanType) -> KahlerDescriptor:
    n = t.rank
    return KahlerDescriptor(
        rank=n,
        generators=tuple(f"d(u{i})" for i in range(1, n + 1)),
        degree_ranks=tuple(math.comb(n, k) for k in range(n + 1)),
    )


@dataclass(frozen=True)
class BottElement:
    """a + b*u in Z[u]/(u^2)."""

    a: int
    b: int

    def __mul__(self, other: "BottElement") -> "BottElement":
        return BottElement(self.a * other.a, self.a * other.b + self.b * other.a)

    def __add__(self, other: "BottElement") -> "BottElement":
        return BottElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "BottElement") -> "BottElement":
        return BottElement(self.a - other.a, self.b - other.b)

    def __pow__(self, m: int) -> "BottElement":
        if m < 0:
            raise ValueError("negative exponent")
        result, base = BottElement(1, 0), self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


def bott_check(m: int) -> BottElement:
    """(1 + u)^m - 1, computed by exponentiation in the truncated ring."""
    if not isinstance(m, int) or m < 1:
        raise InvalidInputError(f"m must be a positive integer, got {m!r}")
    if m > _INT64_MAX:
        raise OverflowError(f"m = {m} does not fit in 64 bits")
    return BottElement(1, 1) ** m - BottElement(1, 0)
