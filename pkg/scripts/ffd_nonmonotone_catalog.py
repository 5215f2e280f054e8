"""Catalogue instances where bisection over the FFD capacity overshoots.

FFD can need more bins at a larger capacity, so bisection may settle above
the smallest feasible capacity. This script finds such instances and writes
one key=value record per instance.

    python scripts/ffd_nonmonotone_catalog.py --trials 200000 --out ffd_catalog.txt
"""

import argparse

from monopart.algos import ffd_bin_count, run_multifit
from monopart.formats import format_record, ints
from monopart.harness import SearchConfig, generate_trial


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    cfg = SearchConfig("LS", args.trials, args.seed, n_range=(4, 12), m_range=(2, 4))
    lines = []
    for t in range(cfg.trials):
        inst, _ = generate_trial(cfg, t)
        res = run_multifit(inst)
        if res.guard_triggered:
            counts = [ffd_bin_count(inst.values, c) for c in range(res.lower_bound, res.search_capacity + 1)]
            lines.append(format_record({
                "trial": t, "seed": cfg.seed, "m": inst.m, "values": ints(inst.values),
                "lower": res.lower_bound, "bisection": res.search_capacity,
                "minimal": res.capacity, "bins": ints(counts),
            }))
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out == "-":
        print(text, end="")
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(f"# trials={cfg.trials} bisection_misses={len(lines)}")


if __name__ == "__main__":
    main()
