"""Seeded value-monotonicity search for LS, LPT and MultiFit.

LS and LPT must report zero violations. MultiFit reports its violations, and
trial 0 is always the known 16 -> 17 counterexample.

    python scripts/theorem_search.py --trials 100000 --seed 42
"""

import argparse
import time
from collections import Counter

from monopart.harness import SearchConfig, search_anomalies


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--multifit-trials", type=int, default=20_000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for algo, trials in (("LS", args.trials), ("LPT", args.trials), ("MULTIFIT", args.multifit_trials)):
        cfg = SearchConfig(algo, trials, args.seed)
        t0 = time.perf_counter()
        reports = search_anomalies(cfg, workers=args.workers)
        kinds = Counter(",".join(sorted(r.result.violated_conditions)) for r in reports)
        print(f"{algo:9s} trials={trials} violations={len(reports)} time={time.perf_counter() - t0:.1f}s")
        for kind, count in kinds.most_common():
            print(f"    {count:6d}  {kind}")
        if algo != "MULTIFIT" and reports:
            r = reports[0]
            print(f"    first: trial={r.trial} {r.result}")


if __name__ == "__main__":
    main()
