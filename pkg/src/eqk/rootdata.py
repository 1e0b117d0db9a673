"""Root-system substrate: Cartan matrices, simple reflections and Weyl orbits.

Nodes are numbered as in Bourbaki's plates throughout the package:

    ====  ==========================================================
    type  Dynkin diagram (``=>`` points from long to short root)
    ====  ==========================================================
    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n
    C_n   1 - 2 - ... - (n-1) <= n
    D_n   1 - 2 - ... - (n-2) - (n-1),  (n-2) - n
    E_n   1 - 3 - 4 - 5 - ... - n,  2 - 4
    F_4   1 - 2 => 3 - 4
    G_2   1 <= 2   (node 1 short)
    ====  ==========================================================

Weights are integer tuples in the basis of fundamental weights.  The Cartan
matrix entry ``C[i][j]`` is ``<alpha_i^vee, alpha_j>``, so the simple root
``alpha_j`` has fundamental-weight coordinates given by column ``j``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError, InvalidInputError

Weight = tuple[int, ...]

DEFAULT_ORBIT_CAP = 10**7

# coordinates never exceed this inside the int64 BFS; one reflection can at
# most quadruple the largest coordinate
_MAGNITUDE_LIMIT = 2**60

FAMILIES = "ABCDEFG"

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidInputError(f"unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidInputError(f"rank must be an integer, got {self.rank!r}")
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                raise InvalidInputError(f"no simple type {self.family}{self.rank}")
        elif self.rank < _MIN_RANK[self.family]:
            raise InvalidInputError(
                f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise InvalidInputError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def all_types(max_rank: int) -> list[CartanType]:
    """Every simple Cartan type of rank at most ``max_rank``, in a fixed order."""
    out = []
    for n in range(1, max_rank + 1):
        for fam in FAMILIES:
            try:
                out.append(CartanType(fam, n))
            except InvalidInputError:
                pass
    return out


def weyl_group_order(t: CartanType) -> int:
    n = t.rank
    f = math.factorial
    return {
        "A": lambda: f(n + 1),
        "B": lambda: 2**n * f(n),
        "C": lambda: 2**n * f(n),
        "D": lambda: 2 ** (n - 1) * f(n),
        "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda: 1152,
        "G": lambda: 12,
    }[t.family]()


def _edges(t: CartanType) -> list[tuple[int, int]]:
    """Simple edges of the Dynkin diagram, 1-based, ignoring bond multiplicity."""
    n = t.rank
    chain = [(i, i + 1) for i in range(1, n)]
    if t.family in "ABC":
        return chain
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if t.family == "E":
        return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]
    if t.family == "F":
        return chain
    return [(1, 2)]


@lru_cache(maxsize=None)
def _cartan(t: CartanType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(t):
        c[i - 1][j - 1] = c[j - 1][i - 1] = -1
    # the row of the short node carries the multiple bond
    if t.family == "B":
        c[n - 1][n - 2] = -2
    elif t.family == "C":
        c[n - 2][n - 1] = -2
    elif t.family == "F":
        c[2][1] = -2
    elif t.family == "G":
        c[0][1] = -3
    return tuple(tuple(row) for row in c)


def cartan_matrix(t: CartanType) -> list[list[int]]:
    """Bourbaki-numbered Cartan matrix of ``t`` as a fresh list of lists."""
    return [list(row) for row in _cartan(t)]


@lru_cache(maxsize=None)
def _cartan_array(t: CartanType) -> np.ndarray:
    a = np.array(_cartan(t), dtype=np.int64)
    a.setflags(write=False)
    return a


def _check_weight(t: CartanType, weight: Sequence[int]) -> Weight:
    w = tuple(int(x) for x in weight)
    if len(w) != t.rank:
        raise InvalidInputError(f"weight {w} has length {len(w)}, {t} needs {t.rank}")
    return w


def _check_node(t: CartanType, i: int) -> None:
    if not 1 <= i <= t.rank:
        raise InvalidInputError(f"node {i} out of range 1..{t.rank} for {t}")


def fundamental_weight(t: CartanType, i: int) -> Weight:
    _check_node(t, i)
    return tuple(1 if j == i - 1 else 0 for j in range(t.rank))


def simple_reflection(t: CartanType, i: int, weight: Sequence[int]) -> Weight:
    """``s_i(weight) = weight - weight_i * alpha_i``."""
    _check_node(t, i)
    w = _check_weight(t, weight)
    c = _cartan(t)
    k = w[i - 1]
    if k == 0:
        return w
    return tuple(w[j] - k * c[j][i - 1] for j in range(t.rank))


def is_dominant(weight: Sequence[int]) -> bool:
    return all(x >= 0 for x in weight)


def dominant_representative(t: CartanType, weight: Sequence[int]) -> Weight:
    """Reflect at negative coordinates until none is left."""
    w = _check_weight(t, weight)
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = simple_reflection(t, i + 1, w)
                break
        else:
            return w


class WeylOrbit:
    """The W-orbit of a weight, stored as a lexicographically sorted int64 array."""

    def __init__(self, cartan_type: CartanType, source: Weight, points: np.ndarray):
        self.cartan_type = cartan_type
        self.source = source
        order = np.lexsort(points.T[::-1])
        pts = np.ascontiguousarray(points[order])
        pts.setflags(write=False)
        self._points = pts

    @property
    def points(self) -> np.ndarray:
        return self._points

    @cached_property
    def elements(self) -> frozenset[Weight]:
        return frozenset(map(tuple, self._points.tolist()))

    @property
    def size(self) -> int:
        return len(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Weight]:
        return map(tuple, self._points.tolist())

    def __contains__(self, weight: object) -> bool:
        return weight in self.elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylOrbit):
            return NotImplemented
        return (
            self.cartan_type == other.cartan_type
            and self._points.shape == other._points.shape
            and bool(np.array_equal(self._points, other._points))
        )

    def __hash__(self) -> int:
        return hash((self.cartan_type, self.source, len(self)))

    def __repr__(self) -> str:
        return f"WeylOrbit({self.cartan_type}, source={self.source}, size={self.size})"


def weyl_orbit(t: CartanType, weight: Sequence[int], cap: int = DEFAULT_ORBIT_CAP) -> WeylOrbit:
    """Enumerate the Weyl orbit of ``weight`` breadth-first from its dominant member.

    Raises CapacityError as soon as more than ``cap`` distinct weights are found.
    """
    dom = dominant_representative(t, weight)
    return _orbit_from_dominant(t, dom, cap)


def _unique_rows(a: np.ndarray) -> np.ndarray:
    lo = a.min(axis=0)
    span = a.max(axis=0) - lo + 1
    if float(np.prod(span.astype(np.float64))) >= 2.0**62:
        return np.unique(a, axis=0)
    # mixed-radix packing keeps the row order lexicographic
    radix = np.concatenate([np.cumprod(span[::-1])[::-1][1:], [1]]).astype(np.int64)
    keys = (a - lo) @ radix
    _, idx = np.unique(keys, return_index=True)
    return a[idx]


@lru_cache(maxsize=128)
def _orbit_from_dominant(t: CartanType, dom: Weight, cap: int) -> WeylOrbit:
    n = t.rank
    roots = _cartan_array(t).T  # row i = alpha_{i+1}
    level = np.array([dom], dtype=np.int64)
    levels = [level]
    total = 1
    if total > cap:
        raise CapacityError(f"orbit of {dom} in {t} exceeds cap {cap}")
    # Reflecting at a positive coordinate moves one step further from the
    # dominant chamber, so each BFS layer only has to be deduplicated
    # against itself.
    while True:
        if np.abs(level).max() > _MAGNITUDE_LIMIT:
            raise OverflowError(f"weight coordinates in the orbit of {dom} exceed int64 headroom")
        children = []
        for i in range(n):
            src = level[level[:, i] > 0]
            if len(src):
                children.append(src - src[:, i : i + 1] * roots[i])
        if not children:
            break
        level = _unique_rows(np.concatenate(children))
        total += len(level)
        if total > cap:
            raise CapacityError(f"orbit of {dom} in {t} exceeds cap {cap} (found {total} so far)")
        levels.append(level)
    return WeylOrbit(t, dom, np.concatenate(levels))
