"""Stand-alone checker for the canonical-form conditions.

Deliberately shares no code with the builder in :mod:`canonical`: contents
are recomputed from the flattened word and every condition is tested
directly, pair by pair.
"""

from __future__ import annotations

from itertools import combinations

from .canonical import CanonicalWord
from .words import analyze, decompose


def _block_contents(w: str) -> list[set[str]]:
    d = decompose(w)
    return [set(b) for b in d.blocks]


def _forced(cons: list[set[str]], k: int, x: str, y: str) -> str | None:
    n = len(cons)
    for g in range(n):
        for h in range(n):
            if x in cons[g] and y in cons[h]:
                if g < h < k or k < g < h or h < k < g:
                    return f"(i) with g={g}, h={h}"
    for g in range(n):
        if g != k and {x, y} <= cons[g]:
            return f"(ii) with g={g}"
    return None


def cf_violations(cw: CanonicalWord) -> list[str]:
    """Every violated condition, as readable messages; empty means canonical."""
    out: list[str] = []
    w = cw.flatten()
    prof = analyze(w)
    d = decompose(w)

    # the stored split must be the maximal simple/non-simple split of the word
    if len(d.pairs) != len(cw.pairs):
        out.append(f"block count {len(cw.pairs)} does not match the word's {len(d.pairs)}")
    for i, s in enumerate(cw.simples, 1):
        if not s:
            out.append(f"I: s{i} is empty")
        bad = set(s) - prof.sim
        if bad:
            out.append(f"I: s{i} has non-simple letters {sorted(bad)}")
    for k, block in enumerate(cw.blocks):
        if 0 < k < len(cw.pairs) and not block:
            out.append(f"II: inner block w{k} is empty")
        for sq in block:
            if set(sq.root) & prof.sim:
                out.append(f"II: block w{k} holds a simple letter")

    cons = _block_contents(w)
    for k, block in enumerate(cw.blocks):
        sets = []
        for j, sq in enumerate(block):
            r = sq.root
            if len(set(r)) != len(r) or list(r) != sorted(r):
                out.append(f"IIa: square {j} of w{k} is not a perfect square")
            sets.append(set(r))
        for a, b in combinations(range(len(sets)), 2):
            common = sets[a] & sets[b]
            for j in range(a, b + 1):
                if not common <= sets[j]:
                    out.append(f"IIb: w{k} squares {a},{b} share {sorted(common)} missing from {j}")
                    break
            if sets[a] <= sets[b] or sets[b] <= sets[a]:
                out.append(f"IIc: w{k} squares {a},{b} are nested")
        if k < len(cons):
            for l in range(1, len(sets)):
                for x in sets[l - 1] - sets[l]:
                    for y in sets[l] - sets[l - 1]:
                        why = _forced(cons, k, x, y)
                        if why:
                            out.append(f"IId: w{k} between squares {l - 1},{l}: {x},{y} satisfy {why}")
    return out


def is_canonical(cw: CanonicalWord) -> bool:
    return not cf_violations(cw)
