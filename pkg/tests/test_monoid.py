import numpy as np
import pytest
from hypothesis import given, strategies as st

from limitvar.catalog import NAMES, PRESENTATIONS, catalog
from limitvar.monoid import (
    BudgetExceeded, MonoidError, Status, adjoin_identity, build_table, direct_product, dual,
    evaluate_name, find_isomorphism, format_table_file, holds_in, parse_table,
    product_satisfaction, satisfies, submonoid,
)
from limitvar.presentation import close_presentation, parse_presentation
from limitvar.words import Identity

from strategies import words

A, A1, B1 = catalog("A"), catalog("A1"), catalog("B1")


def test_table_lookups():
    assert A.mul_names("c", "b") == "a"
    assert A.mul_names("e", "e") == "e"
    assert all(A.mul_names("0", x) == "0" for x in A.names)


def test_adjoin_identity():
    assert A.order == 6 and A1.order == 7
    assert catalog("N1").order == 3
    assert A1.mul_names("1", "e") == "e" == A1.mul_names("e", "1")


def test_adjoin_adds_fresh_element_even_with_neutral():
    T1 = adjoin_identity(catalog("T"), name="u")
    assert T1.order == 2


def test_dual():
    assert dual(A).mul_names("b", "c") == A.mul_names("c", "b") == "a"
    assert dual(dual(A)) == A
    N1 = catalog("N1")
    assert dual(N1) == N1
    assert np.array_equal(catalog("B").table, catalog("A").table.T)


def test_direct_product():
    P = catalog("A1xB1")
    assert P.order == 49
    assert P.names[P.one_index] == "(1,1)"
    assert P.mul_names("(e,1)", "(d,1)") == "(c,1)"


def test_product_is_associative_up_to_relabelling():
    N1, J1, L1 = catalog("N1"), catalog("J1"), catalog("L1")
    left = direct_product(direct_product(N1, J1), L1)
    right = direct_product(N1, direct_product(J1, L1))
    assert left.order == right.order == 48

    def key(name):
        return name.replace("(", "").replace(")", "")

    idx = {key(n): i for i, n in enumerate(right.names)}
    perm = np.array([idx[key(n)] for n in left.names])
    assert np.array_equal(perm[left.table], right.table[perm[:, None], perm[None, :]])


def test_evaluate():
    sigma = {"x": "e", "y": "d", "t": "b"}
    assert evaluate_name(A1, "xyytx", sigma) == "a"
    assert evaluate_name(A1, "xyyxtx", sigma) == "0"
    assert evaluate_name(A1, "", {}) == "1"


def test_satisfies_examples():
    assert satisfies(A1, Identity("xx", "xxx")).holds
    assert satisfies(A1, Identity("x", "x")).holds
    rep = satisfies(A1, Identity("xyytx", "xyyxtx"))
    assert rep.fails
    assert evaluate_name(A1, "xyytx", rep.witness) != evaluate_name(A1, "xyyxtx", rep.witness)
    # the reference witness is one of the failing assignments
    sigma = {"x": "e", "y": "d", "t": "b"}
    assert evaluate_name(A1, "xyytx", sigma) != evaluate_name(A1, "xyyxtx", sigma)


def test_sampled_mode_and_budget():
    rep = satisfies(A1, Identity("xy", "yx"), "sampled", samples=500, seed=1)
    assert rep.status is Status.FAILS
    rep = satisfies(A1, Identity("xx", "xxx"), "sampled", samples=500, seed=1)
    assert rep.status is Status.NO_COUNTEREXAMPLE
    with pytest.raises(BudgetExceeded):
        satisfies(catalog("A1xB1"), Identity("xyztsab", "xyztsab"), budget=10**6)


def test_product_satisfaction_examples():
    assert product_satisfaction(A1, B1, Identity("xyyx", "xyxy"))
    assert satisfies(catalog("A1xB1"), Identity("xyyx", "xyxy")).holds
    assert not product_satisfaction(A1, B1, Identity("xxyy", "xyyx"))
    assert product_satisfaction(A1, B1, Identity("xyx", "xyx"))


@given(words("xy", 1, 6), words("xy", 1, 6))
def test_product_satisfaction_matches_direct_check(u, v):
    ident = Identity(u, v)
    direct = satisfies(catalog("A1xB1"), ident).holds
    assert direct == product_satisfaction(A1, B1, ident) == holds_in(catalog("A1xB1"), ident)


def test_small_presentations():
    J = catalog("J")
    assert J.order == 3
    assert J.mul_names("b", "a") == "a" and J.mul_names("a", "b") == "0"
    assert J.mul_names("b", "b") == "b" and J.mul_names("a", "a") == "0"
    L, R = catalog("L"), catalog("R")
    assert L.order == R.order == 3
    assert find_isomorphism(dual(L), R) is not None
    assert catalog("N").order == 2
    assert catalog("A01").order == 5


@pytest.mark.parametrize("name", NAMES)
def test_catalog_is_associative_and_aperiodic(name):
    M = catalog(name)
    t = M.table
    # (xy)z at [x, y, z] versus x(yz) at [x, y, z]
    assert np.array_equal(t[t], t[:, t])
    assert M.is_aperiodic()


def test_j1_embeds_in_a1():
    sub = submonoid(A1, ["0", "1", "b", "d"])
    assert find_isomorphism(catalog("J1"), sub) is not None


def test_submonoid_must_be_closed():
    with pytest.raises(MonoidError):
        submonoid(A1, ["1", "c", "b"])


def test_non_associative_table_rejected():
    with pytest.raises(MonoidError):
        build_table(["p", "q"], [["q", "p"], ["p", "p"]])


def test_table_file_round_trip():
    assert parse_table(format_table_file(A1)) == A1


def test_presentation_file():
    text = "gens: a b\nab = 0\nba = a\nbb = b\n"
    assert find_isomorphism(close_presentation(parse_presentation(text)), catalog("J")) is not None
    p = parse_presentation("gens: a b c\ncb = a\nothers = 0\n")
    assert p == PRESENTATIONS["M"]


def test_value_table_agrees_with_evaluate():
    from limitvar.monoid import value_table
    vals = value_table(A1, "xyx", "xy")
    assert len(vals) == 49
    # lexicographic: row i*7+j assigns x to element i and y to element j
    for i in range(7):
        for j in range(7):
            assert vals[i * 7 + j] == A1.table[A1.table[i, j], i]
