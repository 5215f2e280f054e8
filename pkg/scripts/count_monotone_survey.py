"""Does adding a part ever raise the largest or smallest sum?

Surveys LS, LPT and MultiFit on random instances, comparing m and m+1 parts,
and prints the counts. It also reruns the dependency example, where the
event-driven makespan grows from 121 to 150 on a fourth machine.

    python scripts/count_monotone_survey.py --trials 100000 --seed 42
"""

import argparse
from collections import Counter

from monopart.harness import SearchConfig, check_count_monotone, survey_count_monotone
from monopart.precedence import DispatchPolicy, PrecedenceInstance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--show", type=int, default=3, help="example violations to print per algorithm")
    args = ap.parse_args()

    prec = PrecedenceInstance.build((30, 21, 22, 20, 40, 40, 40, 40, 90), [(3, k) for k in (4, 5, 6, 7)], 3)
    res = check_count_monotone(DispatchPolicy.EVENT_DRIVEN, prec, 4)
    print(f"precedence event-driven m=3->4: makespan {max(res.before_sums)} -> {max(res.after_sums)} "
          f"{res.verdict.value} {sorted(res.violated_conditions)}")

    for algo in ("LS", "LPT", "MULTIFIT"):
        cfg = SearchConfig(algo, args.trials, args.seed)
        reports = survey_count_monotone(cfg)
        kinds = Counter(",".join(sorted(r.result.violated_conditions)) for r in reports)
        print(f"{algo:9s} trials={args.trials} violations={len(reports)} {dict(kinds)}")
        for r in reports[: args.show]:
            x = r.result
            print(f"    trial={r.trial} m={x.instance.m} values={list(x.instance.values)} "
                  f"{x.before_sums} -> {x.after_sums}")


if __name__ == "__main__":
    main()
