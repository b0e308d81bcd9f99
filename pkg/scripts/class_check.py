"""Compare canonical forms with evaluation fingerprints on random words.

Two words are equivalent exactly when they take the same value under every
assignment into A¹ and into B¹.  Over a fixed letter set this "fingerprint"
is a finite array, so grouping random words by fingerprint and by canonical
form must give the same partition.
"""

import argparse
import random
import time
from collections import defaultdict

import numpy as np

from limitvar.canonical import canonicalize
from limitvar.catalog import catalog
from limitvar.monoid import value_table


def fingerprint(w: str, letters: str) -> bytes:
    A1, B1 = catalog("A1"), catalog("B1")
    return b"".join(np.asarray(value_table(M, w, letters), dtype=np.int8).tobytes()
                    for M in (A1, B1))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=5000)
    ap.add_argument("--letters", default="abcd")
    ap.add_argument("--min-len", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=11)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    by_print, by_form = defaultdict(set), defaultdict(set)
    t0 = time.perf_counter()
    for _ in range(args.words):
        k = rng.randint(2, len(args.letters))
        w = "".join(rng.choice(args.letters[:k]) for _ in range(rng.randint(args.min_len, args.max_len)))
        f, c = fingerprint(w, args.letters), canonicalize(w).canonical
        by_print[f].add(c)
        by_form[c].add(f)
    split = sum(len(v) > 1 for v in by_print.values())
    merged = sum(len(v) > 1 for v in by_form.values())
    print(f"seed {args.seed}")
    print(f"words {args.words}  classes {len(by_print)}  split {split}  merged {merged}  "
          f"seconds {time.perf_counter() - t0:.1f}")
    return 0 if split == merged == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
