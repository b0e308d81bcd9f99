"""Differential test of decide() against the exhaustive oracle.

    python3 scripts/run_difftest.py --random 10000 --seed 0 --out results/difftest.tsv
"""

import argparse
import sys
from pathlib import Path

from limitvar.decider import DiffTestConfig, differential_test


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--letters", type=int, default=2)
    ap.add_argument("--maxlen", type=int, default=6)
    ap.add_argument("--random", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random-letters", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--random-maxlen", type=int, default=8)
    ap.add_argument("--out", type=Path, help="write disagreements and audit failures as TSV")
    args = ap.parse_args()

    cfg = DiffTestConfig(args.letters, args.maxlen, args.random, args.seed,
                         tuple(args.random_letters), args.random_maxlen)
    print(f"seed {cfg.seed}", flush=True)
    rep = differential_test(cfg, progress=lambda r: print(f"  {r.pairs} pairs", file=sys.stderr))
    print(rep.summary())
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        rows = ["kind\tu\tv\tdetail"]
        rows += [f"disagreement\t{d.u}\t{d.v}\tdecide={d.decided.verdict}" for d in rep.disagreements]
        rows += [f"trace\t{w}\t\t{why}" for w, why in rep.trace_failures]
        rows += [f"citation\t{w}\t\t{why}" for w, why in rep.citation_failures]
        rows += [f"canonical-form\t{w}\t\t{'; '.join(why)}" for w, why in rep.cf_failures]
        rows += [f"idempotence\t{w}\t\t" for w in rep.idempotence_failures]
        rows += [f"necessity\t{u}\t{v}\t{','.join(b)}" for u, v, b in rep.necessity_failures]
        args.out.write_text("\n".join(rows) + "\n")
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
