"""One-step deductions from the basis, and traces made of them.

A step replaces ``p·θ(src)·s`` by ``p·θ(dst)·s`` where ``src → dst`` is one
side of a basis instance read forward (lhs to rhs) or backward.  Steps record
everything needed to re-check them; :func:`check_trace` re-checks from the
recorded data and falls back to a pattern search when that data is off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .basis import SCHEMAS, instantiate
from .words import Identity, format_word, parse_word

FWD, BWD = "fwd", "bwd"


def substitute(w: str, theta: Mapping[str, str]) -> str:
    return "".join(theta[c] for c in w)


@dataclass(frozen=True)
class Step:
    before: str
    after: str
    tag: str
    n: int | None
    index: int
    theta: Mapping[str, str]
    prefix: str
    suffix: str
    direction: str = FWD

    @property
    def identity(self) -> Identity:
        return instantiate(self.tag, self.n)[self.index]

    @property
    def schema(self) -> str:
        n = "" if self.n is None else f":{self.n}"
        return f"{self.tag}{n}#{self.index}"

    def sides(self) -> tuple[str, str]:
        ident = self.identity
        return (ident.lhs, ident.rhs) if self.direction == FWD else (ident.rhs, ident.lhs)

    def inverse(self) -> "Step":
        return Step(self.after, self.before, self.tag, self.n, self.index, self.theta,
                    self.prefix, self.suffix, BWD if self.direction == FWD else FWD)

    def problem(self) -> str | None:
        """Why the recorded data does not describe a valid step, or None."""
        if self.tag not in SCHEMAS:
            return f"{self.tag} is not a basis schema"
        try:
            src, dst = self.sides()
        except (ValueError, IndexError) as exc:
            return f"bad schema reference {self.schema}: {exc}"
        letters = set(src) | set(dst)
        if set(self.theta) != letters:
            return f"substitution covers {sorted(self.theta)}, identity uses {sorted(letters)}"
        if any(not v for v in self.theta.values()):
            return "substitution maps a letter to the empty word"
        if self.prefix + substitute(src, self.theta) + self.suffix != self.before:
            return "before does not match prefix·θ(side)·suffix"
        if self.prefix + substitute(dst, self.theta) + self.suffix != self.after:
            return "after does not match prefix·θ(side)·suffix"
        return None


@dataclass
class DerivationTrace:
    start: str
    steps: list[Step] = field(default_factory=list)

    @property
    def end(self) -> str:
        return self.steps[-1].after if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def inverse(self) -> "DerivationTrace":
        return DerivationTrace(self.end, [s.inverse() for s in reversed(self.steps)])

    def schemas_used(self) -> set[str]:
        return {s.tag for s in self.steps}


# -- matching --------------------------------------------------------------

def _match(pattern: str, word: str, theta: dict[str, str]) -> Iterator[dict[str, str]]:
    """All extensions of theta with theta(pattern) == word, nonempty values."""
    if not pattern:
        if not word:
            yield theta
        return
    c, rest = pattern[0], pattern[1:]
    if c in theta:
        v = theta[c]
        if word.startswith(v):
            yield from _match(rest, word[len(v):], theta)
        return
    # every remaining unbound occurrence needs at least one letter
    bound = sum(len(theta[d]) if d in theta else 1 for d in rest)
    for k in range(1, len(word) - bound + 1):
        theta[c] = word[:k]
        yield from _match(rest, word[k:], theta)
        del theta[c]


@dataclass(frozen=True)
class Match:
    theta: dict[str, str]
    prefix: str
    suffix: str
    direction: str


def match_instance(u: str, v: str, identity: Identity) -> Match | None:
    """Find θ and context with u = p·θ(l)·s, v = p·θ(r)·s for some reading of identity."""
    for direction, (src, dst) in ((FWD, (identity.lhs, identity.rhs)),
                                  (BWD, (identity.rhs, identity.lhs))):
        lp = 0
        while lp < min(len(u), len(v)) and u[lp] == v[lp]:
            lp += 1
        for p in range(lp + 1):
            su = 0
            while su < min(len(u), len(v)) - p and u[-1 - su] == v[-1 - su]:
                su += 1
            for s in range(su + 1):
                um, vm = u[p:len(u) - s], v[p:len(v) - s]
                for th in _match(src, um, {}):
                    for th2 in _match(dst, vm, dict(th)):
                        return Match(dict(th2), u[:p], u[len(u) - s:], direction)
    return None


def find_step(u: str, v: str, n_max: int | None = None) -> Step | None:
    """Search every basis instance for one step turning u into v."""
    n_max = max(len(u), len(v)) if n_max is None else n_max
    for tag, schema in SCHEMAS.items():
        ns = range(schema.n_min, n_max + 1) if schema.parametric else [None]
        for n in ns:
            for i, ident in enumerate(schema.instantiate(n)):
                m = match_instance(u, v, ident)
                if m:
                    return Step(u, v, tag, n, i, m.theta, m.prefix, m.suffix, m.direction)
    return None


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    endpoint: str
    failed_step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_trace(w: str, trace: DerivationTrace, target: str | None = None) -> TraceCheck:
    if trace.start != w:
        return TraceCheck(False, w, 0, "trace does not start at the given word")
    cur = w
    for i, st in enumerate(trace.steps):
        if st.before != cur:
            return TraceCheck(False, cur, i, "step does not continue from the previous word")
        problem = st.problem()
        if problem is not None:
            cited = None
            if st.tag in SCHEMAS:
                try:
                    cited = st.identity
                except (ValueError, IndexError):
                    cited = None
            if cited is None or match_instance(st.before, st.after, cited) is None:
                return TraceCheck(False, cur, i, problem)
        cur = st.after
    if target is not None and cur != target:
        return TraceCheck(False, cur, None, f"trace ends at {format_word(cur)}, expected {format_word(target)}")
    return TraceCheck(True, cur)


# -- text format -----------------------------------------------------------

def format_step(st: Step) -> str:
    theta = ",".join(f"{k}:{v}" for k, v in sorted(st.theta.items()))
    return (f"{format_word(st.before)} |- {format_word(st.after)} ; schema={st.schema} ; "
            f"theta={theta} ; ctx={st.prefix}|{st.suffix} ; dir={st.direction}")


def format_trace(trace: DerivationTrace) -> str:
    lines = [f"# start {format_word(trace.start)}"]
    lines += [format_step(s) for s in trace.steps]
    return "\n".join(lines) + "\n"


def _parse_schema(text: str) -> tuple[str, int | None, int]:
    head, idx = text.split("#")
    if ":" in head:
        tag, n = head.split(":")
        return tag, int(n), int(idx)
    return head, None, int(idx)


def parse_step(line: str) -> Step:
    parts = [p.strip() for p in line.split(";")]
    before, after = (parse_word(x) for x in parts[0].split("|-"))
    fields = dict(p.split("=", 1) for p in parts[1:])
    tag, n, idx = _parse_schema(fields["schema"])
    theta = dict(kv.split(":", 1) for kv in fields["theta"].split(",") if kv)
    prefix, suffix = fields["ctx"].split("|")
    return Step(before, after, tag, n, idx, theta, prefix, suffix, fields.get("dir", FWD))


def parse_trace(text: str, start: str | None = None) -> DerivationTrace:
    steps = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            head = line[1:].split()
            if len(head) == 2 and head[0] == "start" and start is None:
                start = parse_word(head[1])
            continue
        steps.append(parse_step(line))
    if start is None:
        start = steps[0].before if steps else ""
    return DerivationTrace(start, steps)
