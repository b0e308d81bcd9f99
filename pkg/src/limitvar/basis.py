"""The identity basis of var{A¹×B¹} as parameterised schemas.

Multi-equation lines such as ``xyx ≈ x²yx ≈ xyx²`` expand into their
adjacent pairs, so each schema instance is a short list of identities and a
derivation step cites ``(tag, n, index)``.  Indexed letters ``y_1..y_n`` and
``z_1..z_n`` are drawn from :func:`indexed_letter` (``a, b, c, ...``), which
never collides with the fixed letters ``x, y, t, s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .catalog import catalog
from .monoid import Monoid, evaluate_name, satisfies
from .words import Identity

_INDEXED = "abcdefghijklmnopqruvwz"


def indexed_letter(i: int) -> str:
    if i < len(_INDEXED):
        return _INDEXED[i]
    # Greek and beyond; any single code point works as a letter
    return chr(0x3B1 + i - len(_INDEXED))


def _chain(*words: str) -> list[Identity]:
    return [Identity(a, b) for a, b in zip(words, words[1:])]


def _squares(n: int) -> str:
    return "".join(indexed_letter(i) * 2 for i in range(n))


def _e1(n):
    return [Identity("xx", "xxx")] + _chain("xyx", "xxyx", "xyxx")


def _e2(n):
    return _chain("xyyx", "xyxy", "xyxyx", "yxxy", "yxyx")


def _e3(n):
    return [
        Identity("xytxsy", "xyxytxsy"),
        Identity("xtyxyxsy", "xtyxsy"),
        Identity("xtysxy", "xtysxyxy"),
    ]


def _e4(n):
    ys = [indexed_letter(i) for i in range(n)]
    return [Identity("x" + "".join(y * 2 for y in ys) + "x",
                     "x" + "".join(y * 2 + "x" for y in ys))]


def _e5(n):
    z = _squares(n)
    return [Identity("xytx" + z + "y", "yxtx" + z + "y")]


def _e6(n):
    z = _squares(n)
    return [Identity("x" + z + "ytxy", "x" + z + "ytyx")]


@dataclass(frozen=True)
class IdentitySchema:
    tag: str
    parametric: bool
    n_min: int
    template: Callable[[int], list[Identity]]

    def instantiate(self, n: int | None = None) -> list[Identity]:
        if not self.parametric:
            return self.template(0)
        if n is None or n < self.n_min:
            raise ValueError(f"{self.tag} needs n >= {self.n_min}, got {n}")
        return self.template(n)


SCHEMAS: dict[str, IdentitySchema] = {
    "E1": IdentitySchema("E1", False, 0, _e1),
    "E2": IdentitySchema("E2", False, 0, _e2),
    "E3": IdentitySchema("E3", False, 0, _e3),
    "E4": IdentitySchema("E4", True, 2, _e4),
    "E5": IdentitySchema("E5", True, 0, _e5),
    "E6": IdentitySchema("E6", True, 0, _e6),
}

NONIDENTITIES: dict[str, Identity] = {
    "N7": Identity("xyytx", "xyyxtx"),
    "N8": Identity("xtyyx", "xtxyyx"),
    "N9": Identity("xsxtx", "xstx"),
    "N10": Identity("xxyy", "xyyx"),
}


def instantiate(tag: str, n: int | None = None) -> list[Identity]:
    if tag in NONIDENTITIES:
        return [NONIDENTITIES[tag]]
    try:
        schema = SCHEMAS[tag]
    except KeyError:
        raise ValueError(f"unknown schema {tag!r}") from None
    return schema.instantiate(n)


@dataclass(frozen=True)
class BasisInstance:
    tag: str
    n: int | None
    index: int
    identity: Identity

    @property
    def label(self) -> str:
        n = "" if self.n is None else f"[{self.n}]"
        return f"{self.tag}{n}#{self.index}"


def basis_instances(n_max: int = 3) -> list[BasisInstance]:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    out = []
    for tag, schema in SCHEMAS.items():
        ns = range(schema.n_min, n_max + 1) if schema.parametric else [None]
        for n in ns:
            for i, ident in enumerate(schema.instantiate(n)):
                out.append(BasisInstance(tag, n, i, ident))
    return out


def basis_identities(n_max: int = 3) -> list[Identity]:
    return [b.identity for b in basis_instances(n_max)]


# -- verification ----------------------------------------------------------

@dataclass(frozen=True)
class BasisCheck:
    instance: BasisInstance
    holds: bool
    factor: str | None = None
    witness: dict[str, str] | None = None

    def record(self) -> str:
        status = "holds" if self.holds else "fails"
        wit = "-" if not self.witness else ",".join(f"{k}:{v}" for k, v in sorted(self.witness.items()))
        return "\t".join([self.instance.label, str(self.instance.identity), status, self.factor or "-", wit])


def verify_basis(S: Monoid, T: Monoid, n_max: int = 3, tags=None, names=("S", "T")) -> list[BasisCheck]:
    """Check every basis instance in both factors, exhaustively."""
    out = []
    for inst in basis_instances(n_max):
        if tags is not None and inst.tag not in tags:
            continue
        result = BasisCheck(inst, True)
        for name, M in zip(names, (S, T)):
            rep = satisfies(M, inst.identity)
            if not rep.holds:
                result = BasisCheck(inst, False, name, rep.witness)
                break
        out.append(result)
    return out


@dataclass(frozen=True)
class WitnessRecord:
    tag: str
    monoid: str
    assignment: dict[str, str]
    lhs_value: str
    rhs_value: str
    # reference values, where known
    printed: tuple[str | None, str | None] = (None, None)
    discrepancy: str | None = None

    @property
    def identity(self) -> Identity:
        return NONIDENTITIES[self.tag]

    def record(self) -> str:
        wit = ",".join(f"{k}:{v}" for k, v in sorted(self.assignment.items()))
        flag = "printed-value-mismatch" if self.discrepancy else "ok"
        return "\t".join([self.tag, str(self.identity), self.monoid, wit,
                          self.lhs_value, self.rhs_value, flag])


class WitnessError(AssertionError):
    """A stored witness no longer separates the two sides."""


_WITNESSES = (
    ("N7", "A1", {"x": "e", "y": "d", "t": "b"}, ("a", "0"), None),
    ("N8", "B1", {"x": "e", "y": "d", "t": "b"}, (None, None), None),
    ("N9", "A1", {"x": "e", "s": "c", "t": "b"}, ("0", "0"),
     "both sides printed as 0; the right side ecbe evaluates to a"),
    ("N10", "A1", {"x": "e", "y": "d"}, ("c", "0"),
     "right side printed as d²e², but the identity's right side is xy²x, i.e. ed²e"),
)


def nonidentity_witnesses() -> list[WitnessRecord]:
    out = []
    for tag, mname, assignment, printed, note in _WITNESSES:
        M = catalog(mname)
        ident = NONIDENTITIES[tag]
        lv = evaluate_name(M, ident.lhs, assignment)
        rv = evaluate_name(M, ident.rhs, assignment)
        if lv == rv:
            raise WitnessError(f"{tag}: both sides evaluate to {lv} in {mname}")
        for shown, got in zip(printed, (lv, rv)):
            if shown is not None and shown != got and note is None:
                raise WitnessError(f"{tag}: printed {shown}, computed {got}")
        out.append(WitnessRecord(tag, mname, dict(assignment), lv, rv, printed, note))
    return out
