import pytest

from limitvar.basis import NONIDENTITIES, basis_identities
from limitvar.lattice import (
    FIGURE_EDGES, STATED_BASES, LatticeError, check_stated_bases, compute_lattice,
    contained, descriptor, figure_order, hasse_dot, satisfaction_matrix,
)
from limitvar.words import Identity


@pytest.fixture(scope="module")
def matrix():
    return satisfaction_matrix(3)


@pytest.fixture(scope="module")
def result():
    return compute_lattice(3)


def test_descriptors():
    a1 = descriptor("A1")
    assert set(a1.defining(3)) == set(basis_identities(3)) | {NONIDENTITIES["N8"]}
    assert descriptor("A01").identities == STATED_BASES["A01"]
    assert Identity("xyx", "xyxx") in descriptor("A01").identities
    assert Identity("x", "y") in descriptor("T").identities
    with pytest.raises(KeyError):
        descriptor("Z")


def test_matrix_cells(matrix):
    assert matrix.get("A1", "(7)") == "F" and matrix.get("A1", "(8)") == "H"
    assert matrix.get("B1", "(7)") == "H" and matrix.get("B1", "(8)") == "F"
    assert matrix.get("A01", "(9)") == "H"
    assert matrix.get("N1", "xy=yx") == "H"
    assert all(matrix.get("A1xB1", f"({i})") == "F" for i in (7, 8, 9, 10))
    assert set(matrix.cells.values()) <= {"H", "F"}


def test_matrix_tsv(matrix):
    lines = matrix.to_tsv().splitlines()
    assert lines[0].split("\t")[:5] == ["monoid", "(7)", "(8)", "(9)", "(10)"]
    assert len(lines) == 1 + len(matrix.rows)


def test_stated_bases_hold():
    assert all(not bad for bad in check_stated_bases().values())


def test_diagram_matches_figure(result):
    assert result.covers == set(FIGURE_EDGES)
    gen = {d.name for d in result.nodes if d.generator}
    assert result.generator_order() == {(a, b) for a, b in figure_order() if a in gen and b in gen}
    assert not result.ties


def test_diagram_shape(result):
    assert ("A1", "A1xB1") in result.covers
    assert ("A1", "B1") not in result.order and ("B1", "A1") not in result.order
    names = {d.name for d in result.nodes}
    assert all(("T", n) in result.order for n in names - {"T"})
    assert len(names) == 13


def test_containment_rules():
    d = descriptor
    assert contained(d("S"), d("N1"))
    assert not contained(d("N1"), d("S"))
    assert contained(d("Q1"), d("A1^B1"))
    assert contained(d("B01"), d("Q1"))
    assert not contained(d("A01"), d("Q1"))


def test_dot_output(result):
    dot = hasse_dot(result)
    assert dot.startswith("digraph")
    assert '"A1" -> "A1xB1";' in dot
    assert '"Q1" -> "A1^B1" [style=dashed];' in dot
    assert dot.count("->") == len(FIGURE_EDGES)


def test_n_max_guard():
    with pytest.raises(ValueError):
        satisfaction_matrix(1)
