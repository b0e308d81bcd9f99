from collections import Counter

import pytest

from limitvar.basis import (
    NONIDENTITIES, SCHEMAS, basis_identities, basis_instances, indexed_letter,
    instantiate, nonidentity_witnesses, verify_basis,
)
from limitvar.catalog import catalog
from limitvar.monoid import build_table, dual, evaluate_name, satisfies
from limitvar.words import Identity

A1, B1 = catalog("A1"), catalog("B1")


def test_instantiate_examples():
    a, b = indexed_letter(0), indexed_letter(1)
    assert instantiate("E4", 2) == [Identity(f"x{a}{a}{b}{b}x", f"x{a}{a}x{b}{b}x")]
    assert instantiate("E5", 0) == [Identity("xytxy", "yxtxy")]
    assert instantiate("E1") == [Identity("xx", "xxx"), Identity("xyx", "xxyx"),
                                 Identity("xxyx", "xyxx")]


def test_parameter_bounds():
    with pytest.raises(ValueError):
        instantiate("E4", 1)
    with pytest.raises(ValueError):
        instantiate("E9")
    with pytest.raises(ValueError):
        basis_instances(1)


def test_indexed_letters_avoid_fixed_letters():
    names = {indexed_letter(i) for i in range(40)}
    assert len(names) == 40
    assert not names & set("xyts")


def test_counts_at_n2():
    ids = basis_identities(2)
    per_tag = Counter(b.tag for b in basis_instances(2))
    assert per_tag == {"E1": 3, "E2": 4, "E3": 3, "E4": 1, "E5": 3, "E6": 3}
    assert len(ids) == 17


def test_balanced_and_contains_e2_pair():
    for ident in basis_identities(3):
        assert ident.is_balanced()
    assert Identity("xyyx", "xyxy") in basis_identities(2)


def test_basis_holds_in_both_factors():
    checks = verify_basis(A1, B1, 3)
    assert len(checks) == 20
    assert all(c.holds for c in checks)


def test_restricted_tags_and_semilattice():
    assert all(c.holds for c in verify_basis(A1, A1, 2, tags={"E5"}))
    SL = build_table(["0", "1"], [["0", "0"], ["0", "1"]])
    assert all(c.holds for c in verify_basis(SL, SL, 2))


def test_verify_reports_failures():
    # the basis does not hold in a group of order 2
    Z2 = build_table(["e", "g"], [["e", "g"], ["g", "e"]])
    bad = [c for c in verify_basis(Z2, Z2, 2) if not c.holds]
    assert bad and bad[0].witness
    assert "fails" in bad[0].record()


def test_witness_values():
    recs = {r.tag: r for r in nonidentity_witnesses()}
    assert set(recs) == {"N7", "N8", "N9", "N10"}
    assert (recs["N7"].lhs_value, recs["N7"].rhs_value) == ("a", "0")
    assert (recs["N10"].lhs_value, recs["N10"].rhs_value) == ("c", "0")
    assert (recs["N9"].lhs_value, recs["N9"].rhs_value) == ("0", "a")
    assert recs["N9"].discrepancy and recs["N10"].discrepancy
    assert not recs["N7"].discrepancy
    for r in recs.values():
        M = catalog(r.monoid)
        ident = NONIDENTITIES[r.tag]
        assert evaluate_name(M, ident.lhs, r.assignment) != evaluate_name(M, ident.rhs, r.assignment)


def test_n7_n8_are_mirror_images():
    n7, n8 = NONIDENTITIES["N7"], NONIDENTITIES["N8"]
    assert n7.reversed() == n8
    for M in (A1, B1):
        assert satisfies(M, n7).holds == satisfies(dual(M), n8).holds


def test_schema_registry():
    assert set(SCHEMAS) == {"E1", "E2", "E3", "E4", "E5", "E6"}
