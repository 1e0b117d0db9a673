"""Wedge decomposition of K-theory of G with G x| Z/2 acting by conjugation.

Subsets S of the nodes {1..n} are sorted into three kinds under the node
involution sigma: invariant (sigma(S) = S), or one member of a swapped pair,
where the member with sigma(S) above S in the chosen order is the
representative.  Each representative contributes a suspended free orbit
Sigma^|S| Z/2_+; each invariant subset contributes Sigma^|S| S^(eps), where
S^(eps) is S^(A-1) for odd eps and S^0 for even eps, and eps counts orbits
of sigma inside S (free orbits only under ALPHA, all orbits under GAMMA).

Every summand is then turned into module atoms per K-degree:

    Sigma^k Z/2_+           InducedRG in degree k
    Sigma^k S^0             FreeRank1 in degree k
    Sigma^k S^(A-1)         KerRes in degree k+1, CokerRes in degree k

(all degrees mod 2), where KerRes and CokerRes are the kernel and cokernel
of restriction R(G x| Z/2) -> R(G).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import CapacityError, ContractError, InvalidInputError
from .involutions import ActionKind, Sigma, SymmetricPair, sigma_of
from .repring import GradedCounts, _sum_counts, dominant_count, fixed_and_regular_counts

Subset = tuple[int, ...]

MAX_EXHAUSTIVE_N = 24


def _key_size_lex(s: Subset) -> tuple:
    return (len(s), s)


def _key_lex(s: Subset) -> tuple:
    return s


def _key_mask(s: Subset) -> int:
    return sum(1 << (i - 1) for i in s)


SUBSET_ORDERS: dict[str, Callable[[Subset], object]] = {
    "size-lex": _key_size_lex,
    "lex": _key_lex,
    "mask": _key_mask,
}
DEFAULT_ORDER = "size-lex"


def subset_order_key(order: str) -> Callable[[Subset], object]:
    try:
        return SUBSET_ORDERS[order]
    except KeyError:
        raise InvalidInputError(
            f"unknown subset order {order!r}; choose from {sorted(SUBSET_ORDERS)}"
        ) from None


class SubsetKind(enum.Enum):
    REPRESENTATIVE = "regular-representative"
    MIRROR = "regular-mirror"
    INVARIANT = "invariant"


@dataclass(frozen=True)
class SubsetClass:
    """A subset with its kind and the number of sigma-orbits it contains.

    ``orb_alpha`` counts the free orbits (swapped pairs) inside the subset and
    ``orb_gamma`` counts all orbits inside it; for invariant subsets these are
    the orbit counts used by the two actions.
    """

    subset: Subset
    kind: SubsetKind
    orb_alpha: int
    orb_gamma: int

    def orb(self, action: ActionKind) -> int:
        return self.orb_alpha if action is ActionKind.ALPHA else self.orb_gamma


def _chunk_tables(sigma: Sigma) -> tuple[list[list[Subset]], list[list[int]]]:
    # per 8-bit chunk: the elements it encodes and the mask of their sigma-images
    n = sigma.n
    elems, images = [], []
    for c in range((n + 7) // 8):
        e_tab, i_tab = [], []
        for b in range(256):
            members = tuple(8 * c + j + 1 for j in range(8) if b >> j & 1 and 8 * c + j < n)
            e_tab.append(members)
            i_tab.append(sum(1 << (sigma(i) - 1) for i in members))
        elems.append(e_tab)
        images.append(i_tab)
    return elems, images


def classify_subsets(
    sigma: Sigma, order: str = DEFAULT_ORDER, max_n: int = MAX_EXHAUSTIVE_N
) -> list[SubsetClass]:
    """Classify all 2^n subsets of the nodes, returned sorted by ``order``."""
    n = sigma.n
    if n > max_n:
        raise CapacityError(
            f"exhaustive classification of 2^{n} subsets exceeds the n <= {max_n} bound; "
            "use oracle.subset_counts_closed_form for counts"
        )
    key = subset_order_key(order)
    elems, images = _chunk_tables(sigma)
    chunks = range(len(elems))
    low = sum(1 << (a - 1) for a, _ in sigma.transpositions())
    fixed = sum(1 << (i - 1) for i in sigma.fixed_points())

    out = []
    for m in range(1 << n):
        s: Subset = ()
        img = 0
        for c in chunks:
            b = (m >> (8 * c)) & 255
            s += elems[c][b]
            img |= images[c][b]
        pairs = (m & img & low).bit_count()
        orb_gamma = pairs + (m & fixed).bit_count()
        if img == m:
            kind = SubsetKind.INVARIANT
        else:
            t: Subset = ()
            for c in chunks:
                t += elems[c][(img >> (8 * c)) & 255]
            kind = SubsetKind.REPRESENTATIVE if key(t) > key(s) else SubsetKind.MIRROR
        out.append(SubsetClass(s, kind, pairs, orb_gamma))
    if order != "mask":
        out.sort(key=lambda sc: key(sc.subset))
    return out


def orb_count(subset: Subset | frozenset[int], sigma: Sigma, action: ActionKind) -> int:
    """Number of sigma-orbits of an invariant subset that the action counts."""
    s = frozenset(subset)
    if sigma.apply_to_set(s) != s:
        raise ContractError(f"subset {sorted(s)} is not sigma-invariant for sigma = {sigma}")
    pairs = sum(1 for a, b in sigma.transpositions() if a in s)
    if action is ActionKind.ALPHA:
        return pairs
    return pairs + sum(1 for i in sigma.fixed_points() if i in s)


class Shape(enum.Enum):
    Z2PLUS = "Z2Plus"
    SPHERE = "Sphere"


@dataclass(frozen=True)
class WedgeSummand:
    shape: Shape
    suspension: int
    epsilon: int | None
    source: SubsetClass

    @property
    def subset(self) -> Subset:
        return self.source.subset

    @property
    def signature(self) -> tuple[str, int, int | None]:
        """(shape, suspension, epsilon parity); equal signatures give isomorphic summands."""
        eps = None if self.epsilon is None else self.epsilon % 2
        return (self.shape.value, self.suspension, eps)

    @property
    def name(self) -> str:
        k = self.suspension
        if self.shape is Shape.Z2PLUS:
            return {0: "Z/2_+", 1: "Σ Z/2_+"}.get(k, f"Σ^{k} Z/2_+")
        if self.epsilon % 2 == 0:
            return f"S^{k}"
        # Sigma^k S^(A-1) = S^((k-1)+A)
        return {0: "S^{A-1}", 1: "S^A"}.get(k, f"S^{{{k - 1}+A}}")


def wedge_decomposition(
    sigma: Sigma, action: ActionKind, order: str = DEFAULT_ORDER
) -> list[WedgeSummand]:
    out = []
    for sc in classify_subsets(sigma, order):
        if sc.kind is SubsetKind.REPRESENTATIVE:
            out.append(WedgeSummand(Shape.Z2PLUS, len(sc.subset), None, sc))
        elif sc.kind is SubsetKind.INVARIANT:
            out.append(WedgeSummand(Shape.SPHERE, len(sc.subset), sc.orb(action), sc))
    return out


class AtomKind(enum.Enum):
    FREE = "FreeRank1"
    INDUCED = "InducedRG"
    KER_RES = "KerRes"
    COKER_RES = "CokerRes"


@dataclass(frozen=True)
class ModuleAtom:
    kind: AtomKind
    origin: Subset


def summand_atoms(w: WedgeSummand) -> tuple[list[ModuleAtom], list[ModuleAtom]]:
    """Atoms contributed by one summand, as (degree-0 atoms, degree-1 atoms)."""
    degrees: tuple[list[ModuleAtom], list[ModuleAtom]] = ([], [])
    k = w.suspension % 2
    if w.shape is Shape.Z2PLUS:
        degrees[k].append(ModuleAtom(AtomKind.INDUCED, w.subset))
    elif w.epsilon % 2 == 0:
        degrees[k].append(ModuleAtom(AtomKind.FREE, w.subset))
    else:
        # K^q(Sigma^k S^(A-1)) = K^(q-k+1)(S^A); K^0(S^A) = KerRes, K^1(S^A) = CokerRes
        degrees[(k + 1) % 2].append(ModuleAtom(AtomKind.KER_RES, w.subset))
        degrees[k].append(ModuleAtom(AtomKind.COKER_RES, w.subset))
    return degrees


@dataclass(frozen=True)
class KModuleDescriptor:
    pair: SymmetricPair
    action: ActionKind
    sigma: Sigma
    order: str
    summands: tuple[WedgeSummand, ...]
    degree0: tuple[ModuleAtom, ...]
    degree1: tuple[ModuleAtom, ...]

    @property
    def cartan_type(self):
        return self.pair.cartan_type

    def atoms(self, degree: int) -> tuple[ModuleAtom, ...]:
        return self.degree0 if degree % 2 == 0 else self.degree1

    def atom_multiset(self, degree: int) -> Counter:
        return Counter(a.kind.value for a in self.atoms(degree))

    def shape_multiset(self) -> Counter:
        return Counter(w.signature for w in self.summands)


def assemble(
    pair: SymmetricPair, action: ActionKind | str, order: str = DEFAULT_ORDER
) -> KModuleDescriptor:
    action = ActionKind.parse(action)
    sigma = sigma_of(pair)
    summands = wedge_decomposition(sigma, action, order)
    deg0: list[ModuleAtom] = []
    deg1: list[ModuleAtom] = []
    for w in summands:
        a0, a1 = summand_atoms(w)
        deg0 += a0
        deg1 += a1
    return KModuleDescriptor(pair, action, sigma, order, tuple(summands), tuple(deg0), tuple(deg1))


class GradedRanks(NamedTuple):
    k0: GradedCounts
    k1: GradedCounts


def atom_counts(sigma: Sigma, bound: int) -> dict[AtomKind, GradedCounts]:
    """Graded rank of each atom kind over the dominant weights of degree 0..bound."""
    fixed, regular = fixed_and_regular_counts(sigma.n, sigma, bound)
    return {
        AtomKind.FREE: 2 * fixed + regular,
        AtomKind.INDUCED: dominant_count(sigma.n, bound),
        AtomKind.KER_RES: fixed,
        AtomKind.COKER_RES: regular,
    }


def graded_ranks(d: KModuleDescriptor, bound: int) -> GradedRanks:
    per_atom = atom_counts(d.sigma, bound)
    return GradedRanks(
        _sum_counts((per_atom[a.kind] for a in d.degree0), bound),
        _sum_counts((per_atom[a.kind] for a in d.degree1), bound),
    )
