"""Deciding identities of var{A¹×B¹}.

Three routes: necessary syntactic conditions (cheap rejection), equality of
canonical forms (the decision procedure proper), and exhaustive evaluation
in A¹ and B¹ (the exact oracle used to test the other two).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from .basis import basis_instances
from .canonical import CanonicalWord, canonicalize
from .catalog import catalog
from .cfcheck import cf_violations
from .derivation import DerivationTrace, check_trace, substitute
from .monoid import satisfies
from .words import Identity, analyze, decompose, fss, restrict

HOLDS, FAILS = "holds", "fails"
REJECT_KINDS = ("content", "simple-letters", "simple-projection", "fss", "block-content")
ORACLE_CAP = 5


@dataclass(frozen=True)
class Decision:
    verdict: str
    reason: str
    kind: str | None = None
    traces: tuple[DerivationTrace, DerivationTrace] | None = None
    canonical: tuple[CanonicalWord, CanonicalWord] | None = None
    witness: dict[str, str] | None = None
    factor: str | None = None
    values: tuple[str, str] | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def derivation(self) -> DerivationTrace | None:
        """One derivation u -> v: u to the common form, then back up to v."""
        if not self.traces:
            return None
        tu, tv = self.traces
        return DerivationTrace(tu.start, tu.steps + tv.inverse().steps)


def fast_reject(u: str, v: str) -> str | None:
    """First necessary condition that u ≈ v violates, or None."""
    pu, pv = analyze(u), analyze(v)
    if pu.content != pv.content:
        return "content"
    if pu.sim != pv.sim:
        return "simple-letters"
    if restrict(u, pu.sim) != restrict(v, pv.sim):
        return "simple-projection"
    if fss(u) != fss(v):
        return "fss"
    bu, bv = decompose(u).blocks, decompose(v).blocks
    if len(bu) != len(bv) or any(set(a) != set(b) for a, b in zip(bu, bv)):
        return "block-content"
    return None


def decide(u: str, v: str) -> Decision:
    kind = fast_reject(u, v)
    if kind:
        return Decision(FAILS, "syntactic-reject", kind)
    cu, cv = canonicalize(u), canonicalize(v)
    if cu.canonical == cv.canonical:
        return Decision(HOLDS, "canonical-equal", traces=(cu.trace, cv.trace),
                        canonical=(cu.canonical, cv.canonical))
    return Decision(FAILS, "canonical-distinct", canonical=(cu.canonical, cv.canonical))


class OracleCapExceeded(ValueError):
    pass


def oracle_decide(u: str, v: str, cap: int = ORACLE_CAP) -> Decision:
    """Exact verdict by exhaustive substitution into A¹ and B¹."""
    ident = Identity(u, v)
    k = len(ident.content)
    if k > cap:
        raise OracleCapExceeded(f"{k} letters exceeds the oracle cap of {cap}")
    for i, name in enumerate(("A1", "B1")):
        rep = satisfies(catalog(name), ident)
        if rep.fails:
            lifted = {c: (f"({e},1)" if i == 0 else f"(1,{e})") for c, e in rep.witness.items()}
            return Decision(FAILS, "oracle", witness=lifted, factor=name,
                            values=(rep.lhs_value, rep.rhs_value))
    return Decision(HOLDS, "oracle")


def necessity_violations(u: str, v: str) -> list[str]:
    """Which necessary conditions for u ≈ v fail (expected empty when it holds)."""
    out = []
    pu, pv = analyze(u), analyze(v)
    if pu.content != pv.content or pu.sim != pv.sim:
        out.append("con/sim")
    if fss(u) != fss(v):
        out.append("fss")
    if restrict(u, pu.sim) != restrict(v, pv.sim):
        out.append("simple-projection")
    bu, bv = decompose(u).blocks, decompose(v).blocks
    if len(bu) != len(bv) or any(set(a) != set(b) for a, b in zip(bu, bv)):
        out.append("block-content")
    return out


# -- differential testing ----------------------------------------------------

@dataclass
class DiffTestConfig:
    letters: int = 2
    maxlen: int = 6
    random: int = 10_000
    seed: int = 0
    random_letters: tuple[int, ...] = (3, 4)
    random_maxlen: int = 8
    audit: bool = True


@dataclass
class Disagreement:
    u: str
    v: str
    decided: Decision
    oracle: Decision


@dataclass
class DiffReport:
    config: DiffTestConfig
    pairs: int = 0
    holds: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    reject_kinds: dict[str, int] = field(default_factory=dict)
    kinds: dict[str, int] = field(default_factory=dict)
    words: int = 0
    trace_failures: list[tuple[str, str]] = field(default_factory=list)
    citation_failures: list[tuple[str, str]] = field(default_factory=list)
    cf_failures: list[tuple[str, list[str]]] = field(default_factory=list)
    idempotence_failures: list[str] = field(default_factory=list)
    necessity_failures: list[tuple[str, str, list[str]]] = field(default_factory=list)
    reject_unsound: list[tuple[str, str, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.disagreements or self.trace_failures or self.citation_failures
                    or self.cf_failures
                    or self.idempotence_failures or self.necessity_failures
                    or self.reject_unsound)

    def summary(self) -> str:
        lines = [
            f"pairs {self.pairs}  (holds {self.holds}, fails {self.pairs - self.holds})",
            f"disagreements {len(self.disagreements)}",
        ]
        if self.kinds:
            lines.append("pair sources " + ", ".join(f"{k}={v}" for k, v in sorted(self.kinds.items())))
        if self.reject_kinds:
            lines.append("fast rejects " + ", ".join(f"{k}={v}" for k, v in sorted(self.reject_kinds.items())))
        if self.config.audit:
            lines += [
                f"words audited {self.words}",
                f"trace failures {len(self.trace_failures)}",
                f"inexact citations {len(self.citation_failures)}",
                f"canonical-form failures {len(self.cf_failures)}",
                f"idempotence failures {len(self.idempotence_failures)}",
                f"necessity violations {len(self.necessity_failures)}",
                f"unsound fast rejects {len(self.reject_unsound)}",
            ]
        lines.append(f"seconds {self.seconds:.1f}")
        for d in self.disagreements[:20]:
            lines.append(f"DISAGREE {d.u or '1'} = {d.v or '1'}: decide {d.decided.verdict} "
                         f"({d.decided.reason}), oracle {d.oracle.verdict}")
        return "\n".join(lines)


_ALPHABET = "xyzt"


def all_words(letters: str, maxlen: int):
    for n in range(maxlen + 1):
        for t in product(letters, repeat=n):
            yield "".join(t)


def exhaustive_pairs(n_letters: int, maxlen: int):
    words = list(all_words(_ALPHABET[:n_letters], maxlen))
    for i, u in enumerate(words):
        for v in words[i:]:
            yield u, v


def _mutate(rng: random.Random, w: str, letters: str) -> str:
    op = rng.randrange(5)
    i = rng.randrange(len(w) + 1) if w else 0
    if op == 0 and w:                       # duplicate a letter in place
        i = min(i, len(w) - 1)
        return w[:i] + w[i] + w[i:]
    if op == 1 and w:                       # drop a letter
        i = min(i, len(w) - 1)
        return w[:i] + w[i + 1:]
    if op == 2 and len(w) >= 2:             # swap neighbours
        i = min(i, len(w) - 2)
        return w[:i] + w[i + 1] + w[i] + w[i + 2:]
    if op == 3 and w:                       # repeat a factor
        j = rng.randint(i, len(w))
        return w[:j] + w[i:j] + w[j:]
    return w[:i] + rng.choice(letters) + w[i:]


_INSTANCES = [b.identity for b in basis_instances(2)]


def _instance_pair(rng: random.Random, letters: str, maxlen: int) -> tuple[str, str] | None:
    for _ in range(20):
        ident = rng.choice(_INSTANCES)
        theta = {c: "".join(rng.choice(letters) for _ in range(rng.choice((1, 1, 1, 2))))
                 for c in sorted(ident.content)}
        p = "".join(rng.choice(letters) for _ in range(rng.randrange(3)))
        s = "".join(rng.choice(letters) for _ in range(rng.randrange(3)))
        u = p + substitute(ident.lhs, theta) + s
        v = p + substitute(ident.rhs, theta) + s
        if len(u) <= maxlen and len(v) <= maxlen:
            return u, v
    return None


def random_pairs(n: int, seed: int, letter_counts=(3, 4), maxlen: int = 8):
    """Seeded mix of independent, mutated, basis-instance and canonical pairs."""
    rng = random.Random(seed)
    for _ in range(n):
        letters = _ALPHABET[: rng.choice(letter_counts)]
        u = "".join(rng.choice(letters) for _ in range(rng.randint(1, maxlen)))
        kind = rng.choice(("independent", "mutation", "instance", "canonical"))
        v = None
        if kind == "independent":
            v = "".join(rng.choice(letters) for _ in range(rng.randint(1, maxlen)))
        elif kind == "mutation":
            v = _mutate(rng, u, letters)
            if len(v) > maxlen:
                v = v[:maxlen]
        elif kind == "instance":
            pair = _instance_pair(rng, letters, maxlen)
            if pair:
                u, v = pair
        else:
            flat = canonicalize(u).word
            if len(flat) <= maxlen:
                v = _mutate(rng, flat, letters) if rng.random() < 0.5 else flat
        if v is None:
            kind = "mutation"
            v = _mutate(rng, u, letters)[:maxlen]
        yield kind, u, v


def _audit_word(rep: DiffReport, w: str) -> None:
    res = canonicalize(w)
    chk = check_trace(w, res.trace, res.word)
    if not chk:
        rep.trace_failures.append((w, f"step {chk.failed_step}: {chk.reason}"))
    for i, st in enumerate(res.trace.steps):
        problem = st.problem()
        if problem:
            rep.citation_failures.append((w, f"step {i}: {problem}"))
            break
    bad = cf_violations(res.canonical)
    if bad:
        rep.cf_failures.append((w, bad))
    if canonicalize(res.word).canonical != res.canonical:
        rep.idempotence_failures.append(w)


def differential_test(config: DiffTestConfig | None = None, progress=None) -> DiffReport:
    config = config or DiffTestConfig()
    rep = DiffReport(config)
    t0 = time.perf_counter()
    seen: set[str] = set()

    def run(kind, u, v):
        rep.pairs += 1
        rep.kinds[kind] = rep.kinds.get(kind, 0) + 1
        d = decide(u, v)
        o = oracle_decide(u, v)
        if d.kind:
            rep.reject_kinds[d.kind] = rep.reject_kinds.get(d.kind, 0) + 1
        if d.verdict != o.verdict:
            rep.disagreements.append(Disagreement(u, v, d, o))
        if o.holds:
            rep.holds += 1
        if config.audit:
            for w in (u, v):
                if w not in seen:
                    seen.add(w)
                    _audit_word(rep, w)
            if o.holds:
                bad = necessity_violations(u, v)
                if bad:
                    rep.necessity_failures.append((u, v, bad))
            if d.kind and o.holds:
                rep.reject_unsound.append((u, v, d.kind))
            if d.holds:
                tu, tv = d.traces
                if not (check_trace(u, tu) and check_trace(v, tv) and tu.end == tv.end):
                    rep.trace_failures.append((f"{u}={v}", "certificate does not meet"))
        if progress and rep.pairs % 2000 == 0:
            progress(rep)

    if config.letters and config.maxlen >= 0:
        for u, v in exhaustive_pairs(config.letters, config.maxlen):
            run("exhaustive", u, v)
    for kind, u, v in random_pairs(config.random, config.seed, config.random_letters,
                                   config.random_maxlen):
        run(kind, u, v)
    rep.words = len(seen)
    rep.seconds = time.perf_counter() - t0
    return rep
