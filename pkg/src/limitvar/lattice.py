"""The monoid subvariety lattice of var{A¹×B¹} as a computation.

Each node is a variety given by a generating monoid, by defining identities,
or both.  Containment V ≤ W means V satisfies W's defining identities:

* V with a generator: check the generator exhaustively (basis schemas are
  cut at ``n_max``);
* V given only by identities: W's identities must follow from V's by
  inclusion plus a short list of recorded deductions, except for the
  semilattice node, where an identity follows iff both sides have the same
  content.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .basis import NONIDENTITIES, basis_instances
from .catalog import catalog
from .monoid import BudgetExceeded, holds_in
from .words import Identity

N7, N8, N9, N10 = (NONIDENTITIES[t] for t in ("N7", "N8", "N9", "N10"))
TRIVIAL = Identity("x", "y")
SEMILATTICE = (Identity("xx", "x"), Identity("xy", "yx"))


def _ids(*pairs: str) -> tuple[Identity, ...]:
    out = []
    for p in pairs:
        l, r = p.split("=")
        out.append(Identity(l, r))
    return tuple(out)


# stated finite bases of the small generators
STATED_BASES: dict[str, tuple[Identity, ...]] = {
    "A01": _ids("xxx=xx", "xxyx=xyx", "xyx=xyxx", "xyhxty=yxhxty", "xhytxy=xhytyx"),
    "B01": _ids("xxx=xx", "xxyx=xyx", "xyx=xyxx", "xyhxty=yxhxty", "xhytxy=xhytyx",
                "xxyy=yyxx"),
    "L1": _ids("xxx=xx", "xyx=xxy", "xxyy=yyxx"),
    "R1": _ids("xxx=xx", "xyx=yxx", "xxyy=yyxx"),
    "M1": _ids("xxx=xx", "xyx=xxy", "xyx=yxx"),
    "N1": _ids("xxx=xx", "xy=yx"),
}

# deductions used to place identity-defined nodes: premise -> consequences
DEDUCTIONS: dict[Identity, tuple[Identity, ...]] = {
    N10: (N7, N8),
    N9: (N7, N8),
}

# cover relations of the reference diagram
FIGURE_EDGES = frozenset({
    ("T", "S"), ("S", "N1"), ("N1", "M1"), ("M1", "L1"), ("M1", "R1"),
    ("L1", "B01"), ("R1", "B01"), ("B01", "A01"), ("B01", "Q1"),
    ("A01", "A1^B1"), ("Q1", "A1^B1"), ("A1^B1", "A1"), ("A1^B1", "B1"),
    ("A1", "A1xB1"), ("B1", "A1xB1"),
})


@dataclass(frozen=True)
class VarietyDescriptor:
    name: str
    label: str
    generator: str | None
    identities: tuple[Identity, ...]
    uses_basis: bool = False
    provenance: str = ""
    external: bool = False

    def defining(self, n_max: int) -> tuple[Identity, ...]:
        base = tuple(basis_identities_cached(n_max)) if self.uses_basis else ()
        return base + self.identities


@lru_cache(maxsize=None)
def basis_identities_cached(n_max: int) -> tuple[Identity, ...]:
    return tuple(b.identity for b in basis_instances(n_max))


def variety_descriptors() -> list[VarietyDescriptor]:
    D = VarietyDescriptor
    return [
        D("T", "var{T}", "T", (TRIVIAL,), provenance="trivial variety"),
        D("S", "var{S}", None, SEMILATTICE, external=True,
          provenance="semilattices, given by identities only"),
        D("N1", "var{N¹}", "N1", STATED_BASES["N1"], provenance="stated finite basis"),
        D("M1", "var{M¹}", "M1", STATED_BASES["M1"], provenance="stated finite basis"),
        D("L1", "var{L¹}", "L1", STATED_BASES["L1"], provenance="stated finite basis"),
        D("R1", "var{R¹}", "R1", STATED_BASES["R1"], provenance="stated finite basis"),
        D("B01", "var{B₀¹}", "B01", STATED_BASES["B01"], provenance="stated finite basis"),
        D("A01", "var{A₀¹}", "A01", STATED_BASES["A01"], provenance="stated finite basis"),
        D("Q1", "var{Q¹}", None, (N10,), uses_basis=True, external=True,
          provenance="basis plus x²y² ≈ xy²x; no generator built"),
        D("A1^B1", "var{A¹} ∧ var{B¹}", None, (N7, N8), uses_basis=True,
          provenance="basis plus both one-sided identities"),
        D("A1", "var{A¹}", "A1", (N8,), uses_basis=True, provenance="basis plus xty²x ≈ xtxy²x"),
        D("B1", "var{B¹}", "B1", (N7,), uses_basis=True, provenance="basis plus xy²tx ≈ xy²xtx"),
        D("A1xB1", "var{A¹×B¹}", "A1xB1", (), uses_basis=True, provenance="the basis"),
    ]


def descriptor(name: str) -> VarietyDescriptor:
    for d in variety_descriptors():
        if d.name == name:
            return d
    raise KeyError(name)


# -- satisfaction matrix -----------------------------------------------------

HOLDS, FAILS, UNKNOWN = "H", "F", "?"


@dataclass
class SatisfactionMatrix:
    rows: list[str]
    columns: list[tuple[str, Identity]]
    cells: dict[tuple[str, str], str] = field(default_factory=dict)

    def get(self, row: str, col: str) -> str:
        return self.cells[(row, col)]

    def to_tsv(self) -> str:
        head = "monoid\t" + "\t".join(c for c, _ in self.columns)
        lines = [head]
        for r in self.rows:
            lines.append(r + "\t" + "\t".join(self.cells[(r, c)] for c, _ in self.columns))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def cell(monoid: str, identity: Identity) -> str:
    try:
        return HOLDS if holds_in(catalog(monoid), identity) else FAILS
    except BudgetExceeded:
        return UNKNOWN


def matrix_columns(n_max: int = 3) -> list[tuple[str, Identity]]:
    cols = [(f"({t[1:]})", NONIDENTITIES[t]) for t in ("N7", "N8", "N9", "N10")]
    cols += [(b.label, b.identity) for b in basis_instances(n_max)]
    seen = {i for _, i in cols}
    for name, ids in STATED_BASES.items():
        for ident in ids:
            if ident not in seen:
                seen.add(ident)
                cols.append((f"{ident.lhs}={ident.rhs}", ident))
    return cols


def satisfaction_matrix(n_max: int = 3) -> SatisfactionMatrix:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    rows = [d.generator for d in variety_descriptors() if d.generator]
    m = SatisfactionMatrix(rows, matrix_columns(n_max))
    for r in rows:
        for c, ident in m.columns:
            m.cells[(r, c)] = cell(r, ident)
    return m


# -- containment and the diagram --------------------------------------------

def _closure(ids) -> set[Identity]:
    out = set(ids)
    changed = True
    while changed:
        changed = False
        for premise, consequences in DEDUCTIONS.items():
            if premise in out and not set(consequences) <= out:
                out |= set(consequences)
                changed = True
    return out


def contained(v: VarietyDescriptor, w: VarietyDescriptor, n_max: int = 3) -> bool:
    """Whether v ≤ w, by the rules in the module docstring."""
    target = w.defining(n_max)
    if v.generator:
        return all(cell(v.generator, i) == HOLDS for i in target)
    if set(v.identities) == set(SEMILATTICE) and not v.uses_basis:
        return all(set(i.lhs) == set(i.rhs) for i in target)
    have = _closure(v.defining(n_max))
    return set(target) <= have


class LatticeError(RuntimeError):
    pass


@dataclass
class LatticeResult:
    nodes: list[VarietyDescriptor]
    order: set[tuple[str, str]]          # strict v < w
    covers: set[tuple[str, str]]
    ties: list[tuple[str, str]]

    def generator_order(self) -> set[tuple[str, str]]:
        gen = {d.name for d in self.nodes if d.generator}
        return {(a, b) for a, b in self.order if a in gen and b in gen}


def _strict_closure(edges) -> set[tuple[str, str]]:
    out = set(edges)
    changed = True
    while changed:
        changed = False
        for a, b in list(out):
            for c, d in list(out):
                if b == c and (a, d) not in out:
                    out.add((a, d))
                    changed = True
    return out


def figure_order() -> set[tuple[str, str]]:
    return _strict_closure(FIGURE_EDGES)


def compute_lattice(n_max: int = 3) -> LatticeResult:
    nodes = variety_descriptors()
    leq = {(v.name, w.name) for v in nodes for w in nodes
           if v.name != w.name and contained(v, w, n_max)}
    ties = sorted((a, b) for a, b in leq if (b, a) in leq and a < b)
    if ties:
        raise LatticeError(f"containment is not antisymmetric: {ties}")
    strict = leq
    covers = {(a, b) for a, b in strict
              if not any((a, c) in strict and (c, b) in strict for c in (n.name for n in nodes))}
    return LatticeResult(nodes, strict, covers, ties)


def hasse_dot(result: LatticeResult) -> str:
    ext = {d.name for d in result.nodes if not d.generator}
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for d in result.nodes:
        style = ' style=dashed shape=box' if d.name in ext else ""
        lines.append(f'  "{d.name}" [label="{d.label}"{style}];')
    for a, b in sorted(result.covers):
        style = " [style=dashed]" if a in ext or b in ext else ""
        lines.append(f'  "{a}" -> "{b}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def check_stated_bases() -> dict[str, list[Identity]]:
    """Identities of each stated basis that its generator fails (expected: none)."""
    return {name: [i for i in ids if cell(name, i) != HOLDS] for name, ids in STATED_BASES.items()}
