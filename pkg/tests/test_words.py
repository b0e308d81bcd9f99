import pytest
from hypothesis import given

from limitvar.words import (
    Identity, analyze, decompose, format_word, fss, parse_identity, parse_word,
    precedes, pretty, rename, restrict,
)

from strategies import letter_sets, words

FSS_WORD = "xxxabcyxdyyefx"


def test_profile_of_the_fss_example():
    p = analyze(FSS_WORD)
    assert p.sim == set("abcdef")
    assert p.non == {"x", "y"}
    assert p.mult["x"] == 5 and p.mult["y"] == 3


def test_profile_small_cases():
    assert analyze("").content == frozenset()
    p = analyze("xyx")
    assert p.mult["x"] == 2 and p.sim == {"y"}


@pytest.mark.parametrize("w, letters, expected", [
    ("xaybx", {"x"}, "xx"),
    ("xaybx", set("xaybx"), "xaybx"),
    (FSS_WORD, set("abcdef"), "abcdef"),
])
def test_restrict(w, letters, expected):
    assert restrict(w, letters) == expected


def test_fss():
    assert fss(FSS_WORD) == {("a", "b"), ("b", "c"), ("e", "f")}
    assert fss("xaxbx") == set()
    assert fss("stu") == {("s", "t"), ("t", "u")}


def test_fss_is_ordered():
    assert fss("ab") == {("a", "b")}
    assert fss("ba") == {("b", "a")}


def test_precedes():
    assert precedes("xxyy", "x", "y")
    assert not precedes("xyx", "x", "y")
    assert precedes("xxyyz", "x", "z")


def test_decompose_examples():
    d = decompose(FSS_WORD)
    assert d.w0 == "xxx"
    assert d.pairs == (("abc", "yx"), ("d", "yy"), ("ef", "x"))
    d = decompose("stu")
    assert d.w0 == "" and d.pairs == (("stu", ""),)
    d = decompose("xyx")
    assert d.w0 == "x" and d.pairs == (("y", "x"),)
    assert decompose("").pairs == () and decompose("").w0 == ""


def test_parse_and_format():
    assert parse_word("1") == ""
    assert parse_word("xyyx") == "xyyx"
    assert format_word("") == "1"
    assert pretty("xxxyzz") == "x³yz²"
    assert parse_identity("xy = yx") == Identity("xy", "yx")
    with pytest.raises(ValueError):
        parse_word("X2")


@given(words(), letter_sets, letter_sets)
def test_restrict_composes(w, B, C):
    assert restrict(restrict(w, B), C) == restrict(w, B & C)


@given(words(max_size=12))
def test_decompose_round_trip(w):
    d = decompose(w)
    assert d.word() == w
    sim = analyze(w).sim
    for s, b in d.pairs:
        assert s and set(s) <= sim
        assert not set(b) & sim
    assert not set(d.w0) & sim


@given(words(max_size=10))
def test_fss_pairs_are_adjacent(w):
    adjacent = {(a, b) for a, b in zip(w, w[1:])}
    assert fss(w) <= adjacent


@given(words("xyzt", max_size=8))
def test_precedes_is_transitive(w):
    letters = sorted(set(w))
    for a in letters:
        for b in letters:
            for c in letters:
                if len({a, b, c}) == 3 and precedes(w, a, b) and precedes(w, b, c):
                    assert precedes(w, a, c)


@given(words(max_size=8))
def test_rename_round_trip(w):
    fwd = {"x": "a", "y": "b", "z": "c", "t": "d"}
    back = {v: k for k, v in fwd.items()}
    assert rename(rename(w, fwd), back) == w
