"""Brute-force cross-checks for the closed forms used elsewhere in the package.

Nothing here calls the code path it checks in the same way: subset counts are
compared against a formula in the cycle type of sigma, fixed/regular weight
counts against explicit enumeration of dominant weights, and the SU(2) and
SU(3) results against standard-monomial counts of polynomial presentations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidInputError
from .involutions import (
    ActionKind,
    Sigma,
    SymmetricPair,
    catalog,
    classify_pair,
    diagram_automorphism,
    sigma_of,
    verify_sigma,
)
from .kmodule import SubsetKind, assemble, classify_subsets, graded_ranks
from .report import VerificationReport
from .repring import (
    bott_check,
    dominant_count,
    fixed_and_regular_counts,
    kahler_descriptor,
    semidirect_basis_counts,
)
from .rootdata import CartanType, all_types

MAX_SWEEP_RANK = 8
SWEEP_DEGREE = 20
GOLDEN_DEGREE = 10
# largest number of dominant weights enumerated per sigma in the sweep
_BRUTE_FORCE_BUDGET = 20000


def subset_counts_closed_form(f: int, p: int, n: int | None = None) -> tuple[int, int]:
    """(invariant subsets, swapped pairs of subsets) for sigma with f fixed points and p 2-cycles."""
    if f < 0 or p < 0:
        raise InvalidInputError("f and p must be nonnegative")
    if n is None:
        n = f + 2 * p
    elif f + 2 * p != n:
        raise InvalidInputError(f"f + 2p = {f + 2 * p} does not match n = {n}")
    invariant = 2 ** (f + p)
    return invariant, (2**n - invariant) // 2


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def brute_force_fixed_regular(sigma: Sigma, bound: int) -> tuple[list[int], list[int], list[int]]:
    """(dominant, fixed, regular orbits) per degree by listing every dominant weight."""
    n = sigma.n
    dominant, fixed, regular = [], [], []
    for d in range(bound + 1):
        seen = set()
        n_dom = n_fixed = 0
        for lam in _compositions(d, n):
            n_dom += 1
            img = sigma.apply_to_weight(lam)
            if img == lam:
                n_fixed += 1
            else:
                seen.add(frozenset((lam, img)))
        dominant.append(n_dom)
        fixed.append(n_fixed)
        regular.append(len(seen))
    return dominant, fixed, regular


@lru_cache(maxsize=None)
def _brute_force_cached(sigma: Sigma, bound: int) -> tuple[list[int], list[int], list[int]]:
    return brute_force_fixed_regular(sigma, bound)


def _brute_force_bound(n: int, max_degree: int) -> int:
    # all weights of degree <= D number C(D + n, n)
    d = 0
    while d < max_degree and math.comb(d + 1 + n, n) <= _BRUTE_FORCE_BUDGET:
        d += 1
    return d


@dataclass(frozen=True)
class Presentation:
    """A graded module given by generators, Groebner leading terms and a degree shift.

    Its Z-basis is the set of monomials in ``generators`` divisible by none of
    ``leading_terms``, each placed in degree ``shift`` plus its own degree.
    """

    name: str
    generators: tuple[tuple[str, int], ...]
    leading_terms: tuple[tuple[tuple[str, int], ...], ...] = ()
    shift: int = 0

    def _exponent_caps(self) -> dict[str, int | None]:
        caps: dict[str, int | None] = {g: None for g, _ in self.generators}
        for term in self.leading_terms:
            if len(term) == 1:
                g, e = term[0]
                caps[g] = e - 1 if caps[g] is None else min(caps[g], e - 1)
        for g, deg in self.generators:
            if deg == 0 and caps[g] is None:
                raise ValueError(f"degree-0 generator {g} is unbounded in {self.name}")
        return caps

    def _standard(self, mono: dict[str, int]) -> bool:
        return not any(all(mono.get(g, 0) >= e for g, e in term) for term in self.leading_terms)

    def monomials(self, degree: int) -> Iterator[dict[str, int]]:
        caps = self._exponent_caps()
        gens = self.generators
        target = degree - self.shift
        if target < 0:
            return

        def rec(i: int, left: int, acc: dict[str, int]) -> Iterator[dict[str, int]]:
            if i == len(gens):
                if left == 0 and self._standard(acc):
                    yield dict(acc)
                return
            g, deg = gens[i]
            cap = caps[g]
            e = 0
            while (cap is None or e <= cap) and e * deg <= left:
                acc[g] = e
                yield from rec(i + 1, left - e * deg, acc)
                e += 1
            acc.pop(g, None)

        yield from rec(0, target, {})

    def basis_counts(self, bound: int) -> list[int]:
        return [sum(1 for _ in self.monomials(d)) for d in range(bound + 1)]


def _sum_tables(parts: list[Presentation], bound: int) -> list[int]:
    total = [0] * (bound + 1)
    for p in parts:
        for d, c in enumerate(p.basis_counts(bound)):
            total[d] += c
    return total


# R(SU(2) x| Z/2) = Z[z, q]/(q^2 - 1); z is the orbit sum of the fundamental weight
_RSU2_SEMI = Presentation("Z[z,q]/(q^2-1)", (("z", 1), ("q", 0)), ((("q", 2),),))
_RSU2_KER = Presentation("Z[z](q-1)", (("z", 1),))
# R(SU(3) x| Z/2) = Z[s1, s2, q]/(q^2 - 1, (q - 1) s1), s1 = z + t, s2 = zt
_RSU3_SEMI = Presentation(
    "Z[s1,s2,q]/(q^2-1,(q-1)s1)",
    (("s1", 1), ("s2", 2), ("q", 0)),
    ((("q", 2),), (("q", 1), ("s1", 1))),
)
_RSU3_COKER = Presentation("Z[s1,s2]{z}", (("s1", 1), ("s2", 2)), shift=1)
_RSU3_RG = Presentation("Z[z,t]", (("z", 1), ("t", 1)))
_RSU3_KER = Presentation("Z[s2](q-1)", (("s2", 2),))


@dataclass(frozen=True)
class Golden:
    pair: SymmetricPair
    action: ActionKind
    wedge: tuple[str, ...]
    degree0: tuple[str, ...]
    degree1: tuple[str, ...]
    k0: tuple[Presentation, ...]
    k1: tuple[Presentation, ...]


def golden_cases(action: ActionKind | str = ActionKind.GAMMA) -> list[Golden]:
    action = ActionKind.parse(action)
    su2 = SymmetricPair("AI", CartanType("A", 1))
    su3 = SymmetricPair("AI", CartanType("A", 2))
    su3_case = Golden(
        su3,
        action,
        ("S^0", "Σ Z/2_+", "S^{1+A}"),
        ("CokerRes", "FreeRank1"),
        ("InducedRG", "KerRes"),
        (_RSU3_SEMI, _RSU3_COKER),
        (_RSU3_RG, _RSU3_KER),
    )
    if action is ActionKind.GAMMA:
        su2_case = Golden(
            su2, action, ("S^0", "S^A"), ("FreeRank1", "KerRes"), ("CokerRes",),
            (_RSU2_SEMI, _RSU2_KER), (),
        )  # fmt: skip
    else:
        # the fixed node is not a free orbit, so the degree-1 sphere is S^1
        su2_case = Golden(
            su2, action, ("S^0", "S^1"), ("FreeRank1",), ("FreeRank1",),
            (_RSU2_SEMI,), (_RSU2_SEMI,),
        )  # fmt: skip
    return [su2_case, su3_case]


def golden_su2_su3(
    action: ActionKind | str = ActionKind.GAMMA, bound: int = GOLDEN_DEGREE
) -> VerificationReport:
    report = VerificationReport()
    for case in golden_cases(action):
        tag = f"golden {case.pair.cartan_type} {case.pair.label} {case.action.value}"
        d = assemble(case.pair, case.action)
        wedge = tuple(w.name for w in d.summands)
        report.add(f"{tag}: wedge", wedge == case.wedge, list(case.wedge), list(wedge))
        for deg, want in ((0, case.degree0), (1, case.degree1)):
            got = tuple(sorted(a.kind.value for a in d.atoms(deg)))
            report.add(f"{tag}: K{deg} atoms", got == tuple(sorted(want)), sorted(want), list(got))
        ranks = graded_ranks(d, bound)
        for deg, parts, got in ((0, case.k0, ranks.k0), (1, case.k1, ranks.k1)):
            want = _sum_tables(list(parts), bound)
            report.add(f"{tag}: K{deg} graded ranks 0..{bound}", got.tolist() == want, want, got.tolist())
    return report


def sweep_pair(pair: SymmetricPair, max_degree: int = SWEEP_DEGREE) -> VerificationReport:
    """All per-pair consistency checks; check names are prefixed by the pair."""
    report = VerificationReport()
    t = pair.cartan_type
    n = t.rank
    kind = classify_pair(pair)
    sigma = sigma_of(pair)
    tag = str(pair)

    for c in verify_sigma(t, sigma, kind.permutation).checks:
        report.add(f"{tag}: {c.name}", c.passed, c.expected, c.actual)
    report.add(
        f"{tag}: outer only over A, D, E6",
        not kind.outer or t.family in "AD" or t == CartanType("E", 6),
        True,
        kind.name,
    )
    report.add(
        f"{tag}: outer sigma is the diagram automorphism",
        sigma == (diagram_automorphism(t) if kind.outer else Sigma.identity(n)),
        list(diagram_automorphism(t) if kind.outer else Sigma.identity(n)),
        list(sigma),
    )

    classes = classify_subsets(sigma)
    n_inv = sum(1 for c in classes if c.kind is SubsetKind.INVARIANT)
    n_rep = sum(1 for c in classes if c.kind is SubsetKind.REPRESENTATIVE)
    f, p = sigma.cycle_type()
    report.add(f"{tag}: subset counts match closed form", (n_inv, n_rep) == subset_counts_closed_form(f, p, n),
               list(subset_counts_closed_form(f, p, n)), [n_inv, n_rep])  # fmt: skip

    fixed, regular = fixed_and_regular_counts(t, sigma, max_degree)
    dom = dominant_count(t, max_degree)
    report.add(f"{tag}: fixed + 2 regular = dominant (0..{max_degree})",
               (fixed + 2 * regular) == dom, dom.tolist(), (fixed + 2 * regular).tolist())  # fmt: skip
    report.add(f"{tag}: dominant - fixed even (0..{max_degree})",
               all((a - b) % 2 == 0 for a, b in zip(dom, fixed)), True, (dom - fixed).tolist())  # fmt: skip
    bf = _brute_force_bound(n, max_degree)
    bf_dom, bf_fixed, bf_reg = _brute_force_cached(sigma, bf)
    got = [dom.tolist()[: bf + 1], fixed.tolist()[: bf + 1], regular.tolist()[: bf + 1]]
    report.add(f"{tag}: counts match enumeration (0..{bf})", got == [bf_dom, bf_fixed, bf_reg],
               [bf_dom, bf_fixed, bf_reg], got)  # fmt: skip

    semi = semidirect_basis_counts(t, sigma, max_degree)
    for action in ActionKind:
        d = assemble(pair, action)
        ranks = graded_ranks(d, max_degree)
        report.add(f"{tag} {action.value}: one summand per representative or invariant subset",
                   len(d.summands) == n_inv + n_rep, n_inv + n_rep, len(d.summands))  # fmt: skip
        other = assemble(pair, action, order="mask")
        same = (
            d.shape_multiset() == other.shape_multiset()
            and d.atom_multiset(0) == other.atom_multiset(0)
            and d.atom_multiset(1) == other.atom_multiset(1)
            and graded_ranks(other, max_degree) == ranks
        )
        report.add(f"{tag} {action.value}: independent of subset order", same, True, same)
        if action is ActionKind.ALPHA and not kind.outer:
            want = (2 ** (n - 1) * semi).tolist()
            report.add(f"{tag} alpha: inner gives 2^(n-1) copies of R(G x| Z/2) (0..{max_degree})",
                       ranks.k0.tolist() == want and ranks.k1.tolist() == want,
                       [want, want], [ranks.k0.tolist(), ranks.k1.tolist()])  # fmt: skip
    return report


def full_sweep(max_rank: int, max_degree: int = SWEEP_DEGREE) -> VerificationReport:
    if not 0 <= max_rank <= MAX_SWEEP_RANK:
        raise InvalidInputError(f"max rank must be in 0..{MAX_SWEEP_RANK}, got {max_rank}")
    report = VerificationReport()
    for t in all_types(max_rank):
        kd = kahler_descriptor(t)
        want = 2 ** (t.rank - 1)
        report.add(f"kahler {t}: even and odd ranks 2^(n-1)",
                   kd.even_rank == want and kd.odd_rank == want, [want, want],
                   [kd.even_rank, kd.odd_rank])  # fmt: skip
    for m in (1, 2, 3, 10, 1000):
        report.add(f"bott (1+u)^{m} - 1 = {m}u", bott_check(m).as_tuple() == (0, m), [0, m],
                   list(bott_check(m).as_tuple()))  # fmt: skip
    for pair in catalog(max_rank):
        report.extend(sweep_pair(pair, max_degree))
    return report
