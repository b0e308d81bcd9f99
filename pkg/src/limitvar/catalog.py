"""Named monoids: A from its table, B as its dual, the small presented semigroups."""

from __future__ import annotations

from functools import lru_cache

from .monoid import Monoid, adjoin_identity, build_table, direct_product, dual
from .presentation import Presentation, close_presentation

A_NAMES = ("0", "a", "b", "c", "d", "e")
A_ROWS = (
    ("0", "0", "0", "0", "0", "0"),
    ("0", "0", "0", "0", "0", "a"),
    ("0", "0", "0", "0", "0", "b"),
    ("0", "0", "a", "0", "c", "0"),
    ("0", "0", "b", "0", "d", "0"),
    ("0", "a", "a", "c", "c", "e"),
)

PRESENTATIONS = {
    "J": Presentation(("a", "b"), (("ab", "0"), ("ba", "a"), ("bb", "b"))),
    "A0": Presentation(("a", "b"), (("aa", "a"), ("bb", "b"), ("ba", "0"))),
    "B0": Presentation(
        ("a", "b", "c"),
        (("aa", "a"), ("bb", "b"), ("ab", "0"), ("ba", "0"), ("ac", "c"), ("cb", "c")),
    ),
    "L": Presentation(("a", "b"), (("aa", "0"), ("ba", "0"), ("ab", "a"), ("bb", "b"))),
    "R": Presentation(("a", "b"), (("aa", "0"), ("ab", "0"), ("ba", "a"), ("bb", "b"))),
    "M": Presentation(("a", "b", "c"), (("cb", "a"),), others_zero=True),
    "N": Presentation(("a",), (("aa", "0"),)),
}

NAMES = (
    "A", "B", "A1", "B1", "A1xB1",
    "J", "J1", "A0", "A01", "B0", "B01", "L", "L1", "R", "R1", "M", "M1", "N", "N1",
    "T",
)


class UnknownMonoid(KeyError):
    pass


@lru_cache(maxsize=None)
def catalog(name: str) -> Monoid:
    if name == "A":
        return build_table(A_NAMES, A_ROWS)
    if name == "B":
        return dual(catalog("A"))
    if name == "A1":
        return adjoin_identity(catalog("A"))
    if name == "B1":
        return dual(catalog("A1"))
    if name == "A1xB1":
        return direct_product(catalog("A1"), catalog("B1"))
    if name == "T":
        return build_table(["1"], [["1"]])
    if name in PRESENTATIONS:
        return close_presentation(PRESENTATIONS[name])
    if name.endswith("1") and name[:-1] in PRESENTATIONS:
        return adjoin_identity(catalog(name[:-1]))
    raise UnknownMonoid(name)
