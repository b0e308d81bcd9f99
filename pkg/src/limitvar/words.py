"""Words over a letter alphabet and the statistics identities are judged by.

A word is a plain ``str``; each character is one letter, and the empty string
is the empty word (the identity of the free monoid).  Letters are ordered by
code point, which fixes the "alphabetical order" used for perfect squares.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

EMPTY_WORD_TOKEN = "1"
_WORD_RE = re.compile(r"^[a-z]+$")


@dataclass(frozen=True)
class Identity:
    lhs: str
    rhs: str

    def __str__(self) -> str:
        return f"{pretty(self.lhs)} ≈ {pretty(self.rhs)}"

    @property
    def content(self) -> frozenset[str]:
        return frozenset(self.lhs) | frozenset(self.rhs)

    def is_balanced(self) -> bool:
        return set(self.lhs) == set(self.rhs)

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def reversed(self) -> "Identity":
        """Mirror image: both sides read right to left."""
        return Identity(self.lhs[::-1], self.rhs[::-1])


@dataclass(frozen=True)
class WordProfile:
    content: frozenset[str]
    sim: frozenset[str]
    non: frozenset[str]
    mult: dict[str, int]


@dataclass(frozen=True)
class BlockDecomposition:
    """``w = w0 s1 w1 ... sn wn`` with maximal runs of simple letters as the s_i."""

    w0: str
    pairs: tuple[tuple[str, str], ...]

    @property
    def blocks(self) -> tuple[str, ...]:
        return (self.w0,) + tuple(w for _, w in self.pairs)

    @property
    def simples(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self.pairs)

    def word(self) -> str:
        return self.w0 + "".join(s + w for s, w in self.pairs)


def parse_word(text: str) -> str:
    """Parse CLI/file syntax: lowercase letters, or ``1`` for the empty word."""
    text = text.strip()
    if text == EMPTY_WORD_TOKEN:
        return ""
    if not _WORD_RE.match(text):
        raise ValueError(f"not a word: {text!r} (use lowercase letters, or 1 for empty)")
    return text


def parse_identity(text: str) -> Identity:
    if "=" not in text:
        raise ValueError(f"identity needs '=': {text!r}")
    lhs, rhs = text.split("=", 1)
    return Identity(parse_word(lhs), parse_word(rhs))


def format_word(w: str) -> str:
    return w if w else EMPTY_WORD_TOKEN


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def pretty(w: str) -> str:
    """Compress runs into exponents: ``xyyx`` -> ``xy²x``."""
    if not w:
        return EMPTY_WORD_TOKEN
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        out.append(w[i] + (str(run).translate(_SUPERSCRIPTS) if run > 1 else ""))
        i = j
    return "".join(out)


def analyze(w: str) -> WordProfile:
    mult = Counter(w)
    sim = frozenset(x for x, m in mult.items() if m == 1)
    non = frozenset(x for x, m in mult.items() if m > 1)
    return WordProfile(frozenset(mult), sim, non, dict(mult))


def content(w: str) -> frozenset[str]:
    return frozenset(w)


def simple_letters(w: str) -> frozenset[str]:
    return analyze(w).sim


def restrict(w: str, letters: Iterable[str]) -> str:
    keep = set(letters)
    return "".join(c for c in w if c in keep)


def fss(w: str) -> frozenset[tuple[str, str]]:
    """Ordered length-two factors made of two simple letters."""
    sim = simple_letters(w)
    return frozenset(
        (a, b) for a, b in zip(w, w[1:]) if a in sim and b in sim
    )


def precedes(w: str, x: str, y: str) -> bool:
    """True iff every occurrence of x in w comes before every occurrence of y."""
    if x not in w or y not in w:
        raise ValueError(f"letters {x!r}, {y!r} must both occur in {w!r}")
    if x == y:
        raise ValueError("precedes needs two distinct letters")
    return w.rindex(x) < w.index(y)


def decompose(w: str) -> BlockDecomposition:
    sim = simple_letters(w)
    runs: list[tuple[bool, str]] = []
    for c in w:
        is_simple = c in sim
        if runs and runs[-1][0] == is_simple:
            runs[-1] = (is_simple, runs[-1][1] + c)
        else:
            runs.append((is_simple, c))
    w0 = ""
    if runs and not runs[0][0]:
        w0 = runs.pop(0)[1]
    pairs = []
    while runs:
        s = runs.pop(0)[1]
        block = runs.pop(0)[1] if runs else ""
        pairs.append((s, block))
    return BlockDecomposition(w0, tuple(pairs))


def rename(w: str, mapping: dict[str, str]) -> str:
    return "".join(mapping.get(c, c) for c in w)
