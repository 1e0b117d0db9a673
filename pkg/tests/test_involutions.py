import pytest

from eqk.errors import ContractError, InvalidInputError
from eqk.involutions import (
    ActionKind,
    Sigma,
    SymmetricPair,
    catalog,
    classify_pair,
    diagram_automorphism,
    sigma_of,
    verify_sigma,
)
from eqk.rootdata import CartanType, all_types

A1, A2, A3 = (CartanType("A", n) for n in (1, 2, 3))
E6 = CartanType("E", 6)
CATALOG = catalog(8)


def test_diagram_automorphisms():
    assert diagram_automorphism(A3) == Sigma((3, 2, 1))
    assert diagram_automorphism(E6) == Sigma((6, 2, 5, 4, 3, 1))
    assert diagram_automorphism(CartanType("D", 5)) == Sigma((1, 2, 3, 5, 4))
    for name in ("B3", "C3", "G2", "F4", "E7", "E8", "A1"):
        t = CartanType.parse(name)
        assert diagram_automorphism(t).is_identity


def test_classify_examples():
    k = classify_pair(SymmetricPair("AI", A2))
    assert k.outer and k.permutation == Sigma((2, 1))
    assert not classify_pair(SymmetricPair("AIII", A3)).outer
    k = classify_pair(SymmetricPair("BDI", CartanType("D", 5), (3, 7)))
    assert k.outer and k.permutation.transpositions() == [(4, 5)]
    assert not classify_pair(SymmetricPair("BDI", CartanType("D", 5), (4, 6))).outer


def test_sigma_examples():
    for n in range(2, 9):
        t = CartanType("A", n - 1)
        s = sigma_of(SymmetricPair("AI", t))
        if n - 1 >= 2:
            assert [s(i) for i in range(1, n)] == [n - i for i in range(1, n)]
    assert sigma_of(SymmetricPair("EII", E6)).is_identity
    assert sigma_of(SymmetricPair("AI", A1)).is_identity
    assert sigma_of(SymmetricPair("AIV", A3)).is_identity


def test_sigma_must_be_involution():
    with pytest.raises(ContractError):
        Sigma((2, 3, 1))
    with pytest.raises(ContractError):
        Sigma((1, 1))


@pytest.mark.parametrize(
    "label,t,params",
    [
        ("AI", CartanType("B", 3), None),
        ("AII", A2, None),
        ("AII", CartanType("A", 1), None),
        ("BDI", CartanType("D", 5), None),
        ("BDI", CartanType("D", 5), (3, 6)),
        ("BDI", CartanType("B", 3), (3, 3)),
        ("EI", CartanType("E", 7), None),
        ("EV", E6, None),
        ("CI", CartanType("B", 3), None),
        ("G", CartanType("F", 4), None),
        ("XI", A2, None),
        ("AI", A2, (1, 2)),
    ],
)
def test_label_type_mismatch(label, t, params):
    with pytest.raises(InvalidInputError):
        SymmetricPair(label, t, params)


def test_catalog_invariants():
    assert len(CATALOG) == len(set(CATALOG))
    for pair in CATALOG:
        s = sigma_of(pair)
        assert all(s(s(i)) == i for i in range(1, s.n + 1))
        kind = classify_pair(pair)
        if not kind.outer:
            assert s.is_identity
        else:
            assert pair.cartan_type.family in "AD" or pair.cartan_type == E6


def test_catalog_small():
    assert [str(p) for p in catalog(2)] == [
        "AI/A1", "AI/A2", "AIII/A2", "BDI/B2(1,4)", "BDI/B2(2,3)", "G/G2",
    ]  # fmt: skip
    assert catalog(0) == []


def test_catalog_covers_every_type_and_label():
    types = {p.cartan_type for p in CATALOG}
    assert types == set(all_types(8))
    labels = {p.label for p in CATALOG}
    assert labels == {
        "AI", "AII", "AIII", "BDI", "DIII", "CI", "CII",
        "EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G",
    }  # fmt: skip


def test_verify_sigma_examples():
    assert verify_sigma(A2, Sigma((2, 1))).overall
    bad = verify_sigma(A2, Sigma.identity(2))
    assert not bad.overall
    assert not bad.checks[0].passed and bad.checks[0].actual == 2
    for t in (A2, CartanType("G", 2), CartanType("D", 4)):
        assert verify_sigma(t, Sigma.identity(t.rank), Sigma.identity(t.rank)).overall


def test_verify_sigma_detects_wrong_e6_table():
    wrong = Sigma.from_cycles(6, [(1, 6)])
    report = verify_sigma(E6, wrong)
    assert [c.passed for c in report.checks] == [True, True, False, True, False, True]


def test_verify_sigma_outer_catalog_pairs():
    for pair in CATALOG:
        kind = classify_pair(pair)
        if kind.outer:
            assert verify_sigma(pair.cartan_type, sigma_of(pair), kind.permutation).overall, pair


def test_action_parse():
    assert ActionKind.parse("Gamma") is ActionKind.GAMMA
    with pytest.raises(InvalidInputError):
        ActionKind.parse("beta")
