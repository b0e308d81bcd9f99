"""Median decide() time per word length and the fitted log-log slope."""

import argparse

from limitvar.bench import ScalingConfig, measure_scaling


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", type=int, nargs="+", default=[8, 16, 32, 64])
    ap.add_argument("--pairs", type=int, default=40)
    ap.add_argument("--letters", default="xy")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    res = measure_scaling(ScalingConfig(tuple(args.lengths), args.pairs, args.letters, args.seed))
    print(f"seed {args.seed}")
    print(res.table(), end="")


if __name__ == "__main__":
    main()
