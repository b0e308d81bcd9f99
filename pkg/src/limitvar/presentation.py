"""Finite semigroups from presentations with an optional zero.

The relations in the catalog are not confluent as written (in ``J`` the
consequence ``a^2 = 0`` only appears through the overlap ``aba``), so the
relations are first completed Knuth-Bendix style under shortlex, then the
normal forms are enumerated breadth first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .monoid import Monoid, MonoidError, from_array

ZERO = "0"
STEP_BUDGET = 10_000


class PresentationError(MonoidError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[str, str], ...]
    # gh = 0 for every pair of generators whose product is not already a relation lhs
    others_zero: bool = False

    @property
    def zero_present(self) -> bool:
        return self.others_zero or any(ZERO in (l, r) for l, r in self.relations)

    def __post_init__(self):
        gens = set(self.generators)
        if ZERO in gens:
            raise PresentationError("'0' is reserved for the zero element")
        for lhs, rhs in self.relations:
            for side in (lhs, rhs):
                if side != ZERO and (not side or not set(side) <= gens):
                    raise PresentationError(f"relation side {side!r} uses non-generators")

    def all_relations(self) -> list[tuple[str, str]]:
        rels = list(self.relations)
        if self.others_zero:
            lhs = {l for l, _ in rels}
            for g in self.generators:
                for h in self.generators:
                    if g + h not in lhs:
                        rels.append((g + h, ZERO))
        return rels


def _key(w: str) -> tuple[int, str]:
    # ZERO sorts below every letter so rules always point at it
    return (len(w), w)


def _orient(a: str, b: str) -> tuple[str, str] | None:
    if a == b:
        return None
    return (a, b) if _key(a) > _key(b) else (b, a)


@dataclass
class RewriteSystem:
    rules: list[tuple[str, str]] = field(default_factory=list)

    def reduce(self, w: str, budget: int = STEP_BUDGET) -> str:
        steps = 0
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self.rules:
                i = w.find(lhs)
                if i >= 0:
                    w = w[:i] + rhs + w[i + len(lhs):]
                    if ZERO in w and w != ZERO:
                        w = ZERO
                    steps += 1
                    if steps > budget:
                        raise PresentationError("rewriting did not terminate within budget")
                    changed = True
                    break
        return w


def _overlaps(l1: str, l2: str):
    """Words where a suffix of l1 overlaps a prefix of l2, or l2 sits inside l1."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield l1 + l2[k:], (0, l1), (len(l1) - k, l2)
    if l2 != l1 and l2 in l1:
        i = l1.index(l2)
        yield l1, (0, l1), (i, l2)


def complete(relations: list[tuple[str, str]], max_rounds: int = 50) -> RewriteSystem:
    system = RewriteSystem()
    pending = [r for r in (_orient(a, b) for a, b in relations) if r]
    for _ in range(max_rounds):
        added = False
        for rule in pending:
            l = system.reduce(rule[0])
            r = system.reduce(rule[1])
            o = _orient(l, r)
            if o and o not in system.rules:
                system.rules.append(o)
                added = True
        # rules whose lhs another rule rewrites go back through the queue
        pending = []
        keep = []
        for l, r in system.rules:
            if any(l2 != l and l2 in l for l2, _ in system.rules):
                pending.append((l, r))
            else:
                keep.append((l, r))
        system.rules = keep
        system.rules = [(l, system.reduce(r)) for l, r in system.rules]
        for l, r in pending:
            o = _orient(system.reduce(l), system.reduce(r))
            if o and o not in system.rules:
                system.rules.append(o)
        pending = []
        for l1, r1 in system.rules:
            for l2, r2 in system.rules:
                for word, (i1, a), (i2, b) in _overlaps(l1, l2):
                    w1 = word[:i1] + r1 + word[i1 + len(a):]
                    w2 = word[:i2] + r2 + word[i2 + len(b):]
                    if ZERO in w1:
                        w1 = ZERO
                    if ZERO in w2:
                        w2 = ZERO
                    p, q = system.reduce(w1), system.reduce(w2)
                    o = _orient(p, q)
                    if o:
                        pending.append(o)
        if not pending and not added:
            return system
        if not pending:
            continue
    raise PresentationError("completion did not converge")


def close_presentation(p: Presentation, cap: int = 64) -> Monoid:
    """Enumerate the semigroup presented by ``p`` as a multiplication table."""
    system = complete(p.all_relations())
    elements: list[str] = []
    seen: set[str] = set()
    frontier = []
    for g in p.generators:
        nf = system.reduce(g)
        if nf not in seen:
            seen.add(nf)
            elements.append(nf)
            frontier.append(nf)
    if p.zero_present and ZERO not in seen:
        seen.add(ZERO)
        elements.append(ZERO)
    while frontier:
        nxt = []
        for w in frontier:
            for g in p.generators:
                nf = system.reduce(w + g) if w != ZERO else ZERO
                if nf not in seen:
                    seen.add(nf)
                    elements.append(nf)
                    nxt.append(nf)
                    if len(elements) > cap:
                        raise PresentationError(f"more than {cap} elements")
        frontier = nxt
    elements.sort(key=_key)
    index = {w: i for i, w in enumerate(elements)}
    table = [
        [index[system.reduce(a + b) if ZERO not in (a, b) else ZERO] for b in elements]
        for a in elements
    ]
    return from_array(elements, table)


def parse_presentation(text: str) -> Presentation:
    """``gens: a b c`` then ``lhs = rhs`` / ``lhs = 0`` lines; ``others = 0`` zeroes the rest."""
    gens: list[str] | None = None
    rels = []
    others = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            gens = line[len("gens:"):].split()
            continue
        if "=" not in line:
            raise PresentationError(f"cannot parse line {line!r}")
        lhs, rhs = (s.strip() for s in line.split("=", 1))
        if lhs == "others" and rhs == ZERO:
            others = True
            continue
        rels.append((lhs, rhs))
    if gens is None:
        raise PresentationError("missing 'gens:' line")
    return Presentation(tuple(gens), tuple(rels), others)
