"""Canonical forms for var{A¹×B¹}, built by explicit basis rewriting.

Every transformation goes through :class:`Rewriter`, which applies a single
basis instance at a known position and records the step.  The macros below
are short fixed derivations (transposing two letters of a square, absorbing
a letter into an adjacent square, ...) composed into the full pipeline:

1. every non-simple letter occurrence becomes a one-letter square;
2. inside each block, squares sharing a letter are merged across the gap
   so every letter occupies a contiguous run of squares;
3. squares whose content sits inside a neighbour's are absorbed;
4. roots are sorted;
5. boundary squares ``(xy)²`` are inserted where the cross-block rule asks
   for them, re-cleaning after each insertion until nothing changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .basis import indexed_letter, instantiate
from .derivation import BWD, FWD, DerivationTrace, Step, substitute
from .words import decompose


class CanonicalizationError(RuntimeError):
    """Internal inconsistency or an exceeded fixpoint budget."""


# -- data ------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PerfectSquare:
    root: str

    def __post_init__(self):
        if not self.root or "".join(sorted(set(self.root))) != self.root:
            raise ValueError(f"{self.root!r} is not a sorted root of distinct letters")

    @classmethod
    def of(cls, letters) -> "PerfectSquare":
        return cls("".join(sorted(set(letters))))

    @property
    def content(self) -> frozenset[str]:
        return frozenset(self.root)

    @property
    def word(self) -> str:
        return self.root * 2

    def __str__(self) -> str:
        return f"{self.root}²" if len(self.root) == 1 else f"({self.root})²"


def is_square(w: str) -> bool:
    h = len(w) // 2
    return len(w) % 2 == 0 and h > 0 and w[:h] == w[h:] and len(set(w[:h])) == h


@dataclass(frozen=True)
class CanonicalWord:
    w0: tuple[PerfectSquare, ...]
    pairs: tuple[tuple[str, tuple[PerfectSquare, ...]], ...]

    @property
    def blocks(self) -> tuple[tuple[PerfectSquare, ...], ...]:
        return (self.w0,) + tuple(b for _, b in self.pairs)

    @property
    def simples(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self.pairs)

    def flatten(self) -> str:
        out = [sq.word for sq in self.w0]
        for s, block in self.pairs:
            out.append(s)
            out += [sq.word for sq in block]
        return "".join(out)

    def __str__(self) -> str:
        parts = [str(sq) for sq in self.w0]
        for s, block in self.pairs:
            parts.append(s)
            parts += [str(sq) for sq in block]
        return " ".join(parts) if parts else "1"


def flatten(cw: CanonicalWord) -> str:
    return cw.flatten()


# -- the rewriter ----------------------------------------------------------

class Rewriter:
    """Current word plus the steps that produced it."""

    def __init__(self, word: str):
        self.start = word
        self.word = word
        self.steps: list[Step] = []

    def apply(self, tag: str, n: int | None, index: int, theta: dict[str, str],
              pos: int, direction: str = FWD) -> None:
        ident = instantiate(tag, n)[index]
        src, dst = (ident.lhs, ident.rhs) if direction == FWD else (ident.rhs, ident.lhs)
        old = substitute(src, theta)
        w = self.word
        if w[pos:pos + len(old)] != old:
            raise CanonicalizationError(
                f"{tag}#{index} {direction}: expected {old!r} at {pos} in {w!r}")
        new = w[:pos] + substitute(dst, theta) + w[pos + len(old):]
        self.steps.append(Step(w, new, tag, n, index, dict(theta), w[:pos],
                               w[pos + len(old):], direction))
        self.word = new

    def trace(self) -> DerivationTrace:
        return DerivationTrace(self.start, list(self.steps))

    def splice_inverse(self, target: str, derive: Callable[["Rewriter"], None]) -> None:
        """Reach ``target`` by deriving target -> current word and reversing it."""
        scratch = Rewriter(target)
        derive(scratch)
        if scratch.word != self.word:
            raise CanonicalizationError("inverse derivation missed the current word")
        self.steps.extend(s.inverse() for s in reversed(scratch.steps))
        self.word = target

    # -- letter level ------------------------------------------------------

    def double_letter(self, i: int) -> None:
        """Insert a second copy of the letter at ``i`` next to it."""
        w = self.word
        c = w[i]
        if i + 1 < len(w) and w[i + 1] == c:
            self.apply("E1", None, 0, {"x": c}, i)
            return
        if i > 0 and w[i - 1] == c:
            self.apply("E1", None, 0, {"x": c}, i - 1)
            return
        j = w.find(c, i + 2)
        if j >= 0:
            self.apply("E1", None, 1, {"x": c, "y": w[i + 1:j]}, i)
            return
        j = w.rfind(c, 0, i - 1)
        if j < 0:
            raise CanonicalizationError(f"letter {c!r} at {i} is simple")
        y = w[j + 1:i]
        self.apply("E1", None, 1, {"x": c, "y": y}, j)
        self.apply("E1", None, 2, {"x": c, "y": y}, j)

    def shorten_run(self, i: int) -> None:
        """ccc at i becomes cc."""
        self.apply("E1", None, 0, {"x": self.word[i]}, i, BWD)

    # -- square level ------------------------------------------------------

    def transpose(self, pos: int, root: str, t: int) -> str:
        """(P a b Q)² at pos becomes (P b a Q)²; returns the new root."""
        P, a, b, Q = root[:t], root[t], root[t + 1], root[t + 2:]
        if P or Q:
            at = pos + len(P)
            self.apply("E5", 0, 0, {"x": a, "y": b, "t": Q + P}, at)
            self.apply("E6", 0, 0, {"x": b, "y": a, "t": Q + P}, at, BWD)
        else:
            th = {"x": a, "y": b}
            self.apply("E2", None, 1, th, pos)
            self.apply("E2", None, 2, th, pos)
            self.apply("E2", None, 3, th, pos)
        return P + b + a + Q

    def reorder(self, pos: int, root: str, target: str) -> str:
        """Bubble the root of the square at pos into the order of target."""
        rank = {c: i for i, c in enumerate(target)}
        cur = root
        for end in range(len(cur) - 1, 0, -1):
            for t in range(end):
                if rank[cur[t]] > rank[cur[t + 1]]:
                    cur = self.transpose(pos, cur, t)
        return cur

    def absorb_left(self, pos: int, root: str) -> None:
        """c·(PcQ)² at pos becomes (PcQ)²."""
        c = self.word[pos]
        k = root.index(c)
        P, Q = root[:k], root[k + 1:]
        if not P and not Q:
            self.apply("E1", None, 0, {"x": c}, pos, BWD)
        elif not P:
            self.apply("E1", None, 1, {"x": c, "y": Q}, pos, BWD)
        else:
            self.apply("E1", None, 1, {"x": P, "y": c + Q}, pos + 1)
            self.apply("E2", None, 2, {"x": P, "y": c}, pos, BWD)
            self.apply("E2", None, 1, {"x": P, "y": c}, pos, BWD)
            if Q:
                self.apply("E1", None, 1, {"x": P + c, "y": Q}, pos, BWD)
            else:
                self.apply("E1", None, 0, {"x": P + c}, pos, BWD)

    def absorb_right(self, pos: int, root: str) -> None:
        """(PcQ)²·c at pos becomes (PcQ)²."""
        c = self.word[pos + 2 * len(root)]
        k = root.index(c)
        P, Q = root[:k], root[k + 1:]
        if not Q and not P:
            self.apply("E1", None, 0, {"x": c}, pos, BWD)
        elif not Q:
            at = pos + len(P)
            self.apply("E1", None, 2, {"x": c, "y": P}, at, BWD)
            self.apply("E1", None, 1, {"x": c, "y": P}, at, BWD)
        elif not P:
            self.apply("E2", None, 1, {"x": c, "y": Q}, pos, BWD)
        else:
            self.apply("E1", None, 1, {"x": Q, "y": P + c}, pos + len(P) + 1)
            self.apply("E1", None, 2, {"x": Q, "y": P + c}, pos + len(P) + 1)
            self.apply("E2", None, 0, {"x": c, "y": Q}, pos + 2 * len(P) + len(Q) + 1)
            at = pos + len(P)
            self.apply("E1", None, 2, {"x": c + Q, "y": P}, at, BWD)
            self.apply("E1", None, 1, {"x": c + Q, "y": P}, at, BWD)

    def insert_after_square(self, pos: int, root: str, c: str) -> None:
        end = pos + 2 * len(root)
        target = self.word[:end] + c + self.word[end:]
        self.splice_inverse(target, lambda r: r.absorb_right(pos, root))

    def insert_before_square(self, pos: int, root: str, c: str) -> None:
        target = self.word[:pos] + c + self.word[pos:]
        self.splice_inverse(target, lambda r: r.absorb_left(pos, root))


# -- structured word -------------------------------------------------------

class _Layout:
    """Blocks as lists of square roots, interleaved with simple runs."""

    def __init__(self, rw: Rewriter, roots: list[list[str]], simples: list[str]):
        self.rw = rw
        self.roots = roots
        self.simples = simples

    def block_start(self, k: int) -> int:
        pos = 0
        for i in range(k):
            pos += sum(2 * len(r) for r in self.roots[i]) + len(self.simples[i])
        return pos

    def square_start(self, k: int, j: int) -> int:
        return self.block_start(k) + sum(2 * len(r) for r in self.roots[k][:j])

    def block_span(self, k: int) -> tuple[int, int]:
        s = self.block_start(k)
        return s, s + sum(2 * len(r) for r in self.roots[k])

    def word(self) -> str:
        out = ["".join(r * 2 for r in self.roots[0])]
        for s, block in zip(self.simples, self.roots[1:]):
            out.append(s)
            out.append("".join(r * 2 for r in block))
        return "".join(out)

    def sync(self) -> None:
        if self.word() != self.rw.word:
            raise CanonicalizationError(f"layout {self.word()!r} != word {self.rw.word!r}")

    # -- per-block operations ---------------------------------------------

    def reorder(self, k: int, j: int, target: str) -> None:
        r = self.roots[k]
        r[j] = self.rw.reorder(self.square_start(k, j), r[j], target)

    def sort_square(self, k: int, j: int) -> None:
        self.reorder(k, j, "".join(sorted(self.roots[k][j])))

    def merge(self, k: int, z: str, left: int, right: int) -> None:
        """z occurs in squares left and right of block k and in none between."""
        r = self.roots[k]
        self.reorder(k, left, r[left].replace(z, "") + z)
        self.reorder(k, right, z + r[right].replace(z, ""))
        gap = r[left + 1:right]
        m = len(gap)
        zpos = self.square_start(k, left) + 2 * len(r[left]) - 1
        if m >= 2:
            theta = {"x": z}
            theta.update({indexed_letter(i): y for i, y in enumerate(gap)})
            self.rw.apply("E4", m, 0, theta, zpos)
        # z positions in z Y1² z Y2² ... Ym² z
        marks = [zpos]
        for y in gap:
            marks.append(marks[-1] + 1 + 2 * len(y))
        for p in reversed(marks):
            self.rw.double_letter(p)
        at = zpos + 1
        for y in gap:
            self.rw.apply("E2", None, 0, {"x": z, "y": y}, at)
            at += 2 + 2 * len(y)
        r[left + 1:right] = [z + y for y in gap]
        self.sync()

    def delete(self, k: int, j: int) -> None:
        """Absorb square j of block k into a neighbour that contains it."""
        r = self.roots[k]
        cj = set(r[j])
        pos = self.square_start(k, j)
        if j + 1 < len(r) and cj <= set(r[j + 1]):
            nb = r[j + 1]
            for t in reversed(range(2 * len(r[j]))):
                self.rw.absorb_left(pos + t, nb)
        elif j > 0 and cj <= set(r[j - 1]):
            nb = r[j - 1]
            left = self.square_start(k, j - 1)
            for _ in range(2 * len(r[j])):
                self.rw.absorb_right(left, nb)
        else:
            raise CanonicalizationError("square is not contained in a neighbour")
        del r[j]
        self.sync()

    def normalize_block(self, k: int) -> None:
        r = self.roots[k]
        # contiguous occurrence runs per letter
        while True:
            step = _first_gap(r)
            if step is None:
                break
            z, left, right = step
            self.merge(k, z, left, right)
        self.cleanup(k)
        for j in range(len(r)):
            self.sort_square(k, j)

    def cleanup(self, k: int) -> None:
        r = self.roots[k]
        while True:
            j = _first_contained(r)
            if j is None:
                return
            self.delete(k, j)


def _first_gap(roots: list[str]) -> tuple[str, int, int] | None:
    """Leftmost letter with two consecutive occurrences that are not adjacent squares."""
    order: list[str] = []
    for r in roots:
        for c in r:
            if c not in order:
                order.append(c)
    for z in order:
        idx = [j for j, r in enumerate(roots) if z in r]
        for a, b in zip(idx, idx[1:]):
            if b > a + 1:
                return z, a, b
    return None


def _first_contained(roots: list[str]) -> int | None:
    for j, r in enumerate(roots):
        s = set(r)
        if (j + 1 < len(roots) and s <= set(roots[j + 1])) or (j > 0 and s <= set(roots[j - 1])):
            return j
    return None


# -- boundary condition ----------------------------------------------------

@dataclass(frozen=True)
class BoundaryRule:
    """Why an {x,y}-square is forced between two squares of block k."""

    kind: str          # "i" or "ii"
    g: int
    h: int | None = None


def boundary_rule(cons: list[frozenset[str]], k: int, x: str, y: str) -> BoundaryRule | None:
    """First reason (in a fixed scan order) that x, y force a square in block k.

    (i)  x in block g, y in block h with g<h<k, k<g<h or h<k<g;
    (ii) x and y together in some block g other than k.
    """
    n = len(cons)
    for g in range(n):
        if x not in cons[g]:
            continue
        for h in range(n):
            if y in cons[h] and (g < h < k or k < g < h or h < k < g):
                return BoundaryRule("i", g, h)
    for g in range(n):
        if g != k and x in cons[g] and y in cons[g]:
            return BoundaryRule("ii", g)
    return None


def first_violation(roots: list[list[str]], cons: list[frozenset[str]]):
    for k, r in enumerate(roots):
        for l in range(1, len(r)):
            a, b = set(r[l - 1]), set(r[l])
            for x in sorted(a - b):
                for y in sorted(b - a):
                    rule = boundary_rule(cons, k, x, y)
                    if rule:
                        return k, l, x, y, rule
    return None


def _insert_pair(lay: _Layout, k: int, l: int, x: str, y: str, rule: BoundaryRule) -> None:
    rw = lay.rw
    r = lay.roots[k]
    A, B = r[l - 1], r[l]
    q = lay.square_start(k, l)
    pos_a = lay.square_start(k, l - 1)
    spans = [lay.block_span(i) for i in range(len(lay.roots))]
    rw.insert_before_square(q, B, y)
    rw.insert_after_square(pos_a, A, x)
    # "xy" now sits at q; blocks after k moved right by 2

    def span(i):
        s, e = spans[i]
        return (s + 2, e + 2) if i > k else (s, e)

    w = rw.word
    if rule.kind == "i":
        g, h = rule.g, rule.h
        gs, ge = span(g)
        hs, he = span(h)
        ix = w.index(x, gs, ge)
        iy = w.index(y, hs, he)
        if k < g < h:
            rw.apply("E3", None, 0, {"x": x, "y": y, "t": w[q + 2:ix], "s": w[ix + 1:iy]}, q)
        elif g < h < k:
            rw.apply("E3", None, 2, {"x": x, "y": y, "t": w[ix + 1:iy], "s": w[iy + 1:q]}, ix)
        else:  # h < k < g
            rw.apply("E3", None, 1, {"x": y, "y": x, "t": w[iy + 1:q], "s": w[q + 2:ix]}, iy, BWD)
    else:
        _pair_from_block(lay, k, q, x, y, rule.g, span)
    new = x + y
    if x > y:
        new = rw.transpose(q, new, 0)
    r.insert(l, new)
    lay.sync()
    lay.normalize_block(k)


def _pair_from_block(lay: _Layout, k: int, q: int, x: str, y: str, g: int, span) -> None:
    """Case (ii): x, y both occur in block g != k."""
    rw = lay.rw
    gs, ge = span(g)

    def spaced_pair():
        w = rw.word
        xs = [i for i in range(gs, ge) if w[i] == x]
        ys = [i for i in range(gs, ge) if w[i] == y]
        for ix in xs:
            for iy in reversed(ys):
                if iy >= ix + 2:
                    return ix, iy
        return None

    def sq_pos(j):
        return gs + sum(2 * len(t) for t in lay.roots[g][:j])

    pair = spaced_pair()
    touched: list[int] = []
    if pair is None:
        shared = [j for j, t in enumerate(lay.roots[g]) if x in t and y in t]
        if shared:
            j = shared[0]
            t = lay.roots[g][j]
            target = t.replace(x, "").replace(y, "") + x + y
            lay.roots[g][j] = rw.reorder(sq_pos(j), t, target)
            touched.append(j)
            pair = spaced_pair()
    w = rw.word
    if pair is not None:
        ix, iy = pair
        if g > k:
            rw.apply("E3", None, 0, {"x": x, "y": y, "t": w[q + 2:ix], "s": w[ix + 1:iy]}, q)
        else:
            rw.apply("E3", None, 2, {"x": x, "y": y, "t": w[ix + 1:iy], "s": w[iy + 1:q]}, ix)
    else:
        # every y precedes every x in block g
        roots = lay.roots[g]
        a = max(j for j, t in enumerate(roots) if y in t)
        b = min(j for j, t in enumerate(roots) if x in t)
        roots[a] = rw.reorder(sq_pos(a), roots[a], roots[a].replace(y, "") + y)
        roots[b] = rw.reorder(sq_pos(b), roots[b], x + roots[b].replace(x, ""))
        touched += [a, b]
        rw.double_letter(q + 1)
        rw.double_letter(q)
        # block g moved right by 2 if it lies after k
        shift = 2 if g > k else 0
        ya = sq_pos(a) + shift + 2 * len(roots[a]) - 1
        xb = sq_pos(b) + shift
        gap = roots[a + 1:b]
        theta = {"x": y, "y": x}
        theta.update({indexed_letter(i): z for i, z in enumerate(gap)})
        w = rw.word
        if g > k:
            theta["t"] = w[q + 3:ya]
            rw.apply("E5", len(gap), 0, theta, q + 1, BWD)
        else:
            theta["t"] = w[xb + 1:q + 1]
            rw.apply("E6", len(gap), 0, theta, ya, BWD)
    # E3 and the doubling both lengthen the word at q, moving block g if it lies after k
    shift = 2 if g > k else 0
    for j in sorted(set(touched)):
        roots = lay.roots[g]
        roots[j] = rw.reorder(sq_pos(j) + shift, roots[j], "".join(sorted(roots[j])))


# -- driver ----------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalResult:
    canonical: CanonicalWord
    trace: DerivationTrace

    @property
    def word(self) -> str:
        return self.canonical.flatten()


def _square_letters(rw: Rewriter, w0: str, pairs) -> tuple[list[list[str]], list[str]]:
    """Turn every block into a list of one-letter squares."""
    blocks = [w0] + [b for _, b in pairs]
    simples = [s for s, _ in pairs]
    roots: list[list[str]] = []
    pos = 0
    for k, block in enumerate(blocks):
        if k:
            pos += len(simples[k - 1])
        r: list[str] = []
        end = pos + len(block)
        while pos < end:
            w = rw.word
            c = w[pos]
            run = 1
            while pos + run < end and w[pos + run] == c:
                run += 1
            if run == 1:
                rw.double_letter(pos)
                end += 1
            while run > 2:
                rw.shorten_run(pos)
                run -= 1
                end -= 1
            r.append(c)
            pos += 2
        roots.append(r)
    return roots, simples


def canonicalize(w: str, budget: int | None = None) -> CanonicalResult:
    """Canonical form of w with a basis derivation w ->* flatten(form)."""
    return _canonicalize(w, budget)


def _boundary_fixpoint(lay: _Layout, cons: list[frozenset[str]], limit: int) -> None:
    inserted = 0
    while True:
        v = first_violation(lay.roots, cons)
        if v is None:
            return
        inserted += 1
        if inserted > limit:
            raise CanonicalizationError(f"boundary insertion exceeded budget {limit}")
        k, l, x, y, rule = v
        _insert_pair(lay, k, l, x, y, rule)
        for j in range(len(lay.roots[k])):
            lay.sort_square(k, j)


def _result(lay: _Layout, simples: list[str]) -> CanonicalResult:
    lay.sync()
    blocks = [tuple(PerfectSquare(r) for r in block) for block in lay.roots]
    cw = CanonicalWord(blocks[0], tuple(zip(simples, blocks[1:])))
    if cw.flatten() != lay.rw.word:
        raise CanonicalizationError("canonical word and derivation disagree")
    return CanonicalResult(cw, lay.rw.trace())


@lru_cache(maxsize=65536)
def _canonicalize(w: str, budget: int | None) -> CanonicalResult:
    dec = decompose(w)
    rw = Rewriter(w)
    roots, simples = _square_letters(rw, dec.w0, dec.pairs)
    lay = _Layout(rw, roots, simples)
    lay.sync()
    for k in range(len(roots)):
        lay.normalize_block(k)
    cons = [frozenset(b) for b in dec.blocks]
    limit = budget if budget is not None else max(1, len(set(w)) ** 2) * max(1, len(roots))
    _boundary_fixpoint(lay, cons, limit)
    return _result(lay, simples)


def insert_boundary_squares(candidate: CanonicalWord, budget: int | None = None) -> CanonicalResult:
    """Add the squares condition (d) asks for to a block-normalized candidate.

    The candidate's blocks must already be products of pairwise non-nested
    perfect squares; a candidate with nothing to add comes back unchanged
    with an empty trace.
    """
    w = candidate.flatten()
    rw = Rewriter(w)
    lay = _Layout(rw, [[sq.root for sq in b] for b in candidate.blocks], list(candidate.simples))
    lay.sync()
    cons = [frozenset(b) for b in decompose(w).blocks]
    limit = budget if budget is not None else max(1, len(set(w)) ** 2) * max(1, len(cons))
    _boundary_fixpoint(lay, cons, limit)
    return _result(lay, list(candidate.simples))


def canonical_word(w: str) -> CanonicalWord:
    return canonicalize(w).canonical


def alphabetize_square(square: str) -> tuple[PerfectSquare, DerivationTrace]:
    """(z1...zr)² to the perfect square on the same letters, by transpositions."""
    if not is_square(square):
        raise ValueError(f"{square!r} is not a square of distinct letters")
    rw = Rewriter(square)
    root = square[: len(square) // 2]
    rw.reorder(0, root, "".join(sorted(root)))
    return PerfectSquare.of(root), rw.trace()


def absorb(inner: str, outer: str, side: str = "left") -> DerivationTrace:
    """Derivation of inner·outer ≈ outer (side='left') or outer·inner ≈ outer.

    Both arguments are squares and con(inner) must lie inside con(outer).
    """
    if not is_square(inner) or not is_square(outer):
        raise ValueError("absorb works on squares")
    r_in, r_out = inner[: len(inner) // 2], outer[: len(outer) // 2]
    if not set(r_in) <= set(r_out):
        raise ValueError(f"content of {inner!r} is not inside {outer!r}")
    if side == "left":
        rw = Rewriter(inner + outer)
        for t in reversed(range(len(inner))):
            rw.absorb_left(t, r_out)
    elif side == "right":
        rw = Rewriter(outer + inner)
        for _ in range(len(inner)):
            rw.absorb_right(0, r_out)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return rw.trace()


def square_normalize(block: str, context: str = "") -> tuple[list[PerfectSquare], DerivationTrace]:
    """Normalize a block of non-simple letters in isolation.

    ``context`` is appended so that letters occurring once in the block still
    count as non-simple; it must not contain letters whose simple status
    would change the block (typically it repeats the block's letters after a
    simple separator, see the tests).  The returned trace rewrites
    ``block + context``.
    """
    w = block + context
    dec = decompose(w)
    if dec.w0 != block:
        raise ValueError("block must consist of letters non-simple in block+context")
    rw = Rewriter(w)
    roots, simples = _square_letters(rw, dec.w0, dec.pairs)
    lay = _Layout(rw, roots, simples)
    lay.normalize_block(0)
    return [PerfectSquare(r) for r in lay.roots[0]], rw.trace()
