"""Symmetric-pair catalog, inner/outer classification and the node involution.

An involution of a simply connected simple group permutes the irreducible
representations.  Inner involutions act trivially; an outer one acts through
the nontrivial Dynkin diagram automorphism, which only exists in types A
(rank >= 2), D and E6.  The induced permutation of the fundamental weights is
what the rest of the package consumes, as a :class:`Sigma`.

Catalog labels follow Cartan's notation.  BDI carries its ``(p, q)`` with
``p + q = 2n + 1`` over B_n and ``p + q = 2n`` over D_n.  AIV (the
``p = 1`` member of AIII) is accepted as input but the catalog lists only
AIII, so the atlas has no duplicate entries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ContractError, InvalidInputError
from .report import VerificationReport
from .rootdata import CartanType, all_types, fundamental_weight, weyl_orbit

LABELS = (
    "AI", "AII", "AIII", "AIV",
    "BDI", "DIII",
    "CI", "CII",
    "EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX",
    "FI", "FII",
    "G",
)  # fmt: skip

_E_LABELS = {
    6: ("EI", "EII", "EIII", "EIV"),
    7: ("EV", "EVI", "EVII"),
    8: ("EVIII", "EIX"),
}


class ActionKind(enum.Enum):
    """How the generator of Z/2 acts on G: by the involution, or by g -> alpha(g)^-1."""

    ALPHA = "alpha"
    GAMMA = "gamma"

    @classmethod
    def parse(cls, text: "str | ActionKind") -> "ActionKind":
        if isinstance(text, ActionKind):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise InvalidInputError(f"action must be 'alpha' or 'gamma', got {text!r}") from None


@dataclass(frozen=True)
class Sigma:
    """An involution of {1, ..., n}, stored as the tuple of images (1-based)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ContractError(f"{self.images} is not a permutation of 1..{n}")
        if any(self.images[j - 1] != i for i, j in enumerate(self.images, 1)):
            raise ContractError(f"{self.images} is not an involution")

    @classmethod
    def identity(cls, n: int) -> "Sigma":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Sigma":
        img = list(range(1, n + 1))
        for a, b in pairs:
            img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images, 1) if i == j]

    def transpositions(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.images, 1) if i < j]

    def cycle_type(self) -> tuple[int, int]:
        """(number of fixed points, number of transpositions)."""
        return len(self.fixed_points()), len(self.transpositions())

    def apply_to_set(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[i - 1] for i in subset)

    def apply_to_weight(self, weight: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.n
        for i, x in enumerate(weight):
            out[self.images[i] - 1] = x
        return tuple(out)

    def __str__(self) -> str:
        if self.is_identity:
            return "id"
        return "".join(f"({a} {b})" for a, b in self.transpositions())


@dataclass(frozen=True)
class InvolutionKind:
    """Inner, or outer together with the Dynkin diagram permutation it induces."""

    outer: bool
    permutation: Sigma

    @property
    def name(self) -> str:
        return "outer" if self.outer else "inner"


@dataclass(frozen=True, order=True)
class SymmetricPair:
    label: str
    cartan_type: CartanType
    params: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        validate_pair(self.label, self.cartan_type, self.params)

    def __str__(self) -> str:
        s = f"{self.label}/{self.cartan_type}"
        if self.params is not None:
            s += f"({self.params[0]},{self.params[1]})"
        return s

    @property
    def slug(self) -> str:
        """Filesystem-friendly identifier, e.g. ``D5-BDI3_7``."""
        s = f"{self.cartan_type}-{self.label}"
        if self.params is not None:
            s += f"{self.params[0]}_{self.params[1]}"
        return s


def validate_pair(label: str, t: CartanType, params: tuple[int, int] | None) -> None:
    if label not in LABELS:
        raise InvalidInputError(f"unknown symmetric-pair label {label!r}")
    fam, n = t.family, t.rank

    def need(cond: bool, why: str) -> None:
        if not cond:
            raise InvalidInputError(f"{label} is not a symmetric pair over {t}: {why}")

    if label == "BDI":
        need(fam in "BD", "BDI needs family B or D")
        need(params is not None, "BDI needs (p, q)")
        p, q = params  # type: ignore[misc]
        need(p >= 1 and q >= 1, "p and q must be positive")
        need(p + q == (2 * n + 1 if fam == "B" else 2 * n), "p + q must equal the defining dimension")
        return
    need(params is None, f"{label} takes no (p, q) parameters")
    if label in ("AI", "AIII", "AIV"):
        need(fam == "A", "needs family A")
    elif label == "AII":
        need(fam == "A" and n % 2 == 1 and n >= 3, "AII is SU(2m)/Sp(m), so rank 2m-1 >= 3")
    elif label == "DIII":
        need(fam == "D", "needs family D")
    elif label in ("CI", "CII"):
        need(fam == "C", "needs family C")
    elif label.startswith("E"):
        need(fam == "E" and label in _E_LABELS.get(n, ()), "wrong E rank for this label")
    elif label in ("FI", "FII"):
        need(fam == "F", "needs F4")
    elif label == "G":
        need(fam == "G", "needs G2")


def diagram_automorphism(t: CartanType) -> Sigma:
    """The nontrivial involutive Dynkin automorphism, or the identity if there is none."""
    n = t.rank
    if t.family == "A" and n >= 2:
        return Sigma(tuple(n + 1 - i for i in range(1, n + 1)))
    if t.family == "D":
        return Sigma.from_cycles(n, [(n - 1, n)])
    if t.family == "E" and n == 6:
        return Sigma.from_cycles(6, [(1, 6), (3, 5)])
    return Sigma.identity(n)


def _is_outer(pair: SymmetricPair) -> bool:
    t = pair.cartan_type
    if t.family == "A":
        # SU(2) has no outer automorphisms, so AI over A1 is inner
        return pair.label in ("AI", "AII") and t.rank >= 2
    if t.family == "D" and pair.label == "BDI":
        return pair.params[0] % 2 == 1  # type: ignore[index]
    if t.family == "E" and t.rank == 6:
        return pair.label in ("EI", "EIV")
    return False


def classify_pair(pair: SymmetricPair) -> InvolutionKind:
    if _is_outer(pair):
        return InvolutionKind(True, diagram_automorphism(pair.cartan_type))
    return InvolutionKind(False, Sigma.identity(pair.cartan_type.rank))


def sigma_of(pair: SymmetricPair) -> Sigma:
    """Permutation of the fundamental weights induced by the involution.

    Used for both actions: in either case Z/2 acts on R(G) through alpha on
    the acting copy of G.
    """
    return classify_pair(pair).permutation


def catalog(max_rank: int = 8) -> list[SymmetricPair]:
    """Every symmetric pair over a simple type of rank <= max_rank, in a fixed order."""
    out: list[SymmetricPair] = []
    for t in all_types(max_rank):
        fam, n = t.family, t.rank
        if fam == "A":
            out.append(SymmetricPair("AI", t))
            if n % 2 == 1 and n >= 3:
                out.append(SymmetricPair("AII", t))
            if n >= 2:
                out.append(SymmetricPair("AIII", t))
        elif fam in "BD":
            dim = 2 * n + 1 if fam == "B" else 2 * n
            for p in range(1, dim // 2 + 1):
                out.append(SymmetricPair("BDI", t, (p, dim - p)))
            if fam == "D":
                out.append(SymmetricPair("DIII", t))
        elif fam == "C":
            out += [SymmetricPair("CI", t), SymmetricPair("CII", t)]
        elif fam == "E":
            out += [SymmetricPair(lab, t) for lab in _E_LABELS[n]]
        elif fam == "F":
            out += [SymmetricPair("FI", t), SymmetricPair("FII", t)]
        else:
            out.append(SymmetricPair("G", t))
    return out


@lru_cache(maxsize=None)
def _orbit_points(t: CartanType, i: int) -> np.ndarray:
    return weyl_orbit(t, fundamental_weight(t, i)).points


def _sorted_rows(a: np.ndarray) -> np.ndarray:
    return a[np.lexsort(a.T[::-1])]


def verify_sigma(
    t: CartanType, sigma: Sigma, automorphism: Sigma | None = None
) -> VerificationReport:
    """Check node by node that the lattice automorphism carries orbit(u_i) onto orbit(u_sigma(i)).

    ``automorphism`` is the node permutation realizing the involution on the
    weight lattice by permuting coordinates; it defaults to the diagram
    automorphism of ``t``.  Inner involutions should pass the identity.
    """
    if sigma.n != t.rank:
        raise ContractError(f"sigma has length {sigma.n}, {t} has rank {t.rank}")
    auto = diagram_automorphism(t) if automorphism is None else automorphism
    if auto.n != t.rank:
        raise ContractError(f"automorphism has length {auto.n}, {t} has rank {t.rank}")
    target_cols = [auto(j) - 1 for j in range(1, t.rank + 1)]
    report = VerificationReport()
    for i in range(1, t.rank + 1):
        pts = _orbit_points(t, i)
        image = np.empty_like(pts)
        image[:, target_cols] = pts
        image = _sorted_rows(image)
        want = _orbit_points(t, sigma(i))
        ok = image.shape == want.shape and bool(np.array_equal(image, want))
        if ok:
            actual = sigma(i)
        else:
            # report which fundamental orbit, if any, the image actually is
            actual = None
            for j in range(1, t.rank + 1):
                other = _orbit_points(t, j)
                if other.shape == image.shape and np.array_equal(other, image):
                    actual = j
                    break
        report.add(f"sigma[{t}] node {i} -> {sigma(i)}", ok, sigma(i), actual)
    return report
