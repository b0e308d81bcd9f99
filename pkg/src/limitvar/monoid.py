"""Finite monoids given by multiplication tables, and identity checking in them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .words import Identity

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 18


class MonoidError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Exhaustive checking would need more assignments than allowed."""


@dataclass(frozen=True, eq=False)
class Monoid:
    names: tuple[str, ...]
    table: np.ndarray
    one_index: int | None = None
    zero_index: int | None = None
    factors: tuple["Monoid", ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise MonoidError(f"no element named {name!r}") from None

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def mul_names(self, x: str, y: str) -> str:
        return self.names[self.mul(self.index(x), self.index(y))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monoid):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.names, self.table.tobytes()))

    def rows(self) -> list[list[str]]:
        return [[self.names[v] for v in row] for row in self.table]

    def format_table(self) -> str:
        width = max(len(n) for n in self.names)
        head = " " * width + " | " + " ".join(n.rjust(width) for n in self.names)
        lines = [head, "-" * len(head)]
        for name, row in zip(self.names, self.rows()):
            lines.append(name.rjust(width) + " | " + " ".join(v.rjust(width) for v in row))
        return "\n".join(lines)

    def is_aperiodic(self) -> bool:
        for x in range(self.order):
            powers = [x]
            while True:
                nxt = self.mul(powers[-1], x)
                if nxt == powers[-1]:
                    break
                if nxt in powers or len(powers) > self.order:
                    return False
                powers.append(nxt)
        return True


def _find_one(table: np.ndarray) -> int | None:
    n = len(table)
    rng = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], rng) and np.array_equal(table[:, e], rng):
            return e
    return None


def _find_zero(table: np.ndarray) -> int | None:
    n = len(table)
    for z in range(n):
        if np.all(table[z] == z) and np.all(table[:, z] == z):
            return z
    return None


def from_array(names: Sequence[str], table, factors: tuple[Monoid, ...] = ()) -> Monoid:
    names = tuple(names)
    arr = np.asarray(table, dtype=np.int64)
    n = len(names)
    if len(set(names)) != n:
        raise MonoidError("element names must be unique")
    if arr.shape != (n, n):
        raise MonoidError(f"table must be {n}x{n}, got {arr.shape}")
    if n == 0:
        raise MonoidError("empty table")
    if arr.min() < 0 or arr.max() >= n:
        raise MonoidError("table entry out of range")
    # (xy)z == x(yz) for all triples
    left = arr[arr[:, :, None], np.arange(n)[None, None, :]]
    right = arr[np.arange(n)[:, None, None], arr[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        x, y, z = bad[0]
        raise MonoidError(
            f"not associative: ({names[x]}{names[y]}){names[z]} != {names[x]}({names[y]}{names[z]})"
        )
    arr.setflags(write=False)
    return Monoid(names, arr, _find_one(arr), _find_zero(arr), factors)


def build_table(names: Sequence[str], rows: Sequence[Sequence[str]]) -> Monoid:
    names = list(names)
    if len(rows) != len(names) or any(len(r) != len(names) for r in rows):
        raise MonoidError("table must be square and match the element list")
    lookup = {n: i for i, n in enumerate(names)}
    try:
        idx = [[lookup[c] for c in row] for row in rows]
    except KeyError as exc:
        raise MonoidError(f"unknown element {exc.args[0]!r} in table") from None
    return from_array(names, idx)


def adjoin_identity(S: Monoid, name: str = "1") -> Monoid:
    """S¹: always adds a fresh identity, even when S already has one."""
    while name in S.names:
        name += "'"
    n = S.order
    arr = np.empty((n + 1, n + 1), dtype=np.int64)
    arr[:n, :n] = S.table
    arr[n, :] = np.arange(n + 1)
    arr[:, n] = np.arange(n + 1)
    return from_array(S.names + (name,), arr)


def dual(S: Monoid) -> Monoid:
    return from_array(S.names, S.table.T.copy(), tuple(dual(f) for f in S.factors))


def direct_product(S: Monoid, T: Monoid) -> Monoid:
    names = [f"({a},{b})" for a in S.names for b in T.names]
    n, m = S.order, T.order
    i = np.arange(n * m)
    si, ti = i // m, i % m
    arr = S.table[si[:, None], si[None, :]] * m + T.table[ti[:, None], ti[None, :]]
    return from_array(names, arr, factors=(S, T))


def submonoid(M: Monoid, names: Sequence[str]) -> Monoid:
    keep = [M.index(n) for n in names]
    pos = {k: i for i, k in enumerate(keep)}
    sub = M.table[np.ix_(keep, keep)]
    try:
        arr = [[pos[int(v)] for v in row] for row in sub]
    except KeyError:
        raise MonoidError(f"{list(names)} is not closed under multiplication") from None
    return from_array([M.names[k] for k in keep], arr)


def find_isomorphism(S: Monoid, T: Monoid) -> dict[str, str] | None:
    """Brute force over bijections; only meant for the tiny monoids used here."""
    if S.order != T.order:
        return None
    if S.order > 8:
        raise MonoidError("isomorphism search is limited to order <= 8")
    n = S.order
    for perm in itertools.permutations(range(n)):
        p = np.array(perm)
        if np.array_equal(p[S.table], T.table[p[:, None], p[None, :]]):
            return {S.names[i]: T.names[perm[i]] for i in range(n)}
    return None


def evaluate(M: Monoid, w: str, assignment: Mapping[str, int | str]) -> int:
    """Value of w under the assignment (letters to element indices or names)."""
    if not w:
        if M.one_index is None:
            raise MonoidError("empty word has no value in a monoid without identity")
        return M.one_index
    vals = {}
    for c in set(w):
        if c not in assignment:
            raise MonoidError(f"letter {c!r} is unassigned")
        v = assignment[c]
        vals[c] = M.index(v) if isinstance(v, str) else int(v)
    acc = vals[w[0]]
    zero = M.zero_index
    for c in w[1:]:
        if acc == zero:
            return acc
        acc = int(M.table[acc, vals[c]])
    return acc


def evaluate_name(M: Monoid, w: str, assignment: Mapping[str, int | str]) -> str:
    return M.names[evaluate(M, w, assignment)]


def _eval_grid(M: Monoid, w: str, letters: Sequence[str], grid: np.ndarray) -> np.ndarray:
    pos = {c: i for i, c in enumerate(letters)}
    if not w:
        if M.one_index is None:
            raise MonoidError("empty word has no value in a monoid without identity")
        return np.full(len(grid), M.one_index, dtype=np.int64)
    acc = grid[:, pos[w[0]]].copy()
    for c in w[1:]:
        acc = M.table[acc, grid[:, pos[c]]]
    return acc


def _grid_chunk(order: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    cols = []
    for _ in range(k):
        cols.append(idx % order)
        idx = idx // order
    return np.stack(cols[::-1], axis=1) if k else np.zeros((stop - start, 0), np.int64)


def value_table(M: Monoid, w: str, letters: Sequence[str]) -> np.ndarray:
    """Value of w under every assignment of ``letters``, in lexicographic order."""
    k = len(letters)
    return _eval_grid(M, w, letters, _grid_chunk(M.order, k, 0, M.order**k))


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NO_COUNTEREXAMPLE = "no-counterexample"


@dataclass(frozen=True)
class SatisfactionReport:
    status: Status
    checked: int
    witness: dict[str, str] | None = None
    lhs_value: str | None = None
    rhs_value: str | None = None

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS


def _letters(identity: Identity) -> list[str]:
    return sorted(identity.content)


def _failure(M: Monoid, identity: Identity, letters, row, checked) -> SatisfactionReport:
    witness = {c: M.names[int(v)] for c, v in zip(letters, row)}
    return SatisfactionReport(
        Status.FAILS,
        checked,
        witness,
        evaluate_name(M, identity.lhs, witness),
        evaluate_name(M, identity.rhs, witness),
    )


def satisfies(
    M: Monoid,
    identity: Identity,
    mode: str = "exhaustive",
    *,
    samples: int = 10_000,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> SatisfactionReport:
    """Check ``identity`` in ``M`` by exhaustive or sampled substitution.

    Exhaustive mode is exact and returns the first failing assignment in
    lexicographic order; it refuses (``BudgetExceeded``) when
    ``order ** letters`` exceeds ``budget``.  Sampled mode can only refute.
    """
    letters = _letters(identity)
    k = len(letters)
    if mode == "exhaustive":
        total = M.order**k
        if total > budget:
            raise BudgetExceeded(
                f"{M.order}^{k} = {total} assignments exceeds budget {budget}; "
                "use sampled mode or check a product factorwise"
            )
        for start in range(0, total, _CHUNK):
            grid = _grid_chunk(M.order, k, start, min(total, start + _CHUNK))
            diff = np.nonzero(
                _eval_grid(M, identity.lhs, letters, grid)
                != _eval_grid(M, identity.rhs, letters, grid)
            )[0]
            if len(diff):
                return _failure(M, identity, letters, grid[diff[0]], start + int(diff[0]) + 1)
        return SatisfactionReport(Status.HOLDS, total)
    if mode == "sampled":
        rng = np.random.default_rng(seed)
        grid = rng.integers(0, M.order, size=(samples, k))
        diff = np.nonzero(
            _eval_grid(M, identity.lhs, letters, grid)
            != _eval_grid(M, identity.rhs, letters, grid)
        )[0]
        if len(diff):
            return _failure(M, identity, letters, grid[diff[0]], int(diff[0]) + 1)
        return SatisfactionReport(Status.NO_COUNTEREXAMPLE, samples)
    raise ValueError(f"unknown mode {mode!r}")


def product_satisfaction(S: Monoid, T: Monoid, identity: Identity, **kw) -> bool:
    """A direct product satisfies an identity iff every factor does."""
    return satisfies(S, identity, **kw).holds and satisfies(T, identity, **kw).holds


def holds_in(M: Monoid, identity: Identity, **kw) -> bool:
    """Exact satisfaction, going factorwise through products built here."""
    if M.factors:
        return all(holds_in(f, identity, **kw) for f in M.factors)
    return satisfies(M, identity, **kw).holds


# -- text formats ----------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_table(text: str) -> Monoid:
    """First line: element names; then one row of products per element."""
    lines = _content_lines(text)
    if not lines:
        raise MonoidError("empty table file")
    names = lines[0].split()
    rows = [ln.split() for ln in lines[1:]]
    return build_table(names, rows)


def format_table_file(M: Monoid) -> str:
    return "\n".join([" ".join(M.names)] + [" ".join(r) for r in M.rows()]) + "\n"
