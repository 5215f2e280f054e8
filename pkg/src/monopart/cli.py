"""monopart command-line front end.

Usage:
    monopart partition {ls,lpt,multifit} FILE [--machine]
    monopart schedule FILE --policy {event,list-order} [--machine]
    monopart check ALGO FILE (--index J --delta E | --m2 K)
    monopart search ALGO [--trials N] [--seed S] [range flags]
    monopart oracle FILE [--objective minmax|maxmin] [--compare ALGO]

Exit codes: 0 success / PASS, 1 violation found, 2 input or usage error.
Indices on the command line and in all output are 1-based.
"""

from __future__ import annotations

import argparse
import secrets
import sys

from . import algos, harness, oracle
from .core import InstanceError, LengthMismatchError, max_sum, min_sum
from .formats import (
    ParseError,
    format_record,
    index_set,
    ints,
    parts_field,
    read_instance,
    read_precedence,
)
from .precedence import CyclicDependencyError, DispatchPolicy, makespan_delta, schedule

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

POLICIES = {"event": DispatchPolicy.EVENT_DRIVEN, "list-order": DispatchPolicy.LIST_ORDER}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _partition_of(algo, inst):
    algo = algo.lower()
    if algo == "ls":
        return algos.run_ls(inst)[0], {}
    if algo == "lpt":
        return algos.run_lpt(inst)[0], {}
    if algo == "multifit":
        res = algos.run_multifit(inst)
        return res.partition, {"capacity": res.capacity}
    raise UsageError(f"unknown algorithm {algo!r}")


def cmd_partition(args, out):
    inst = read_instance(args.file)
    part, extra = _partition_of(args.algo, inst)
    if args.machine:
        rec = {"algo": args.algo, "m": inst.m, "values": ints(inst.values),
               "parts": parts_field(part.parts), "sums": ints(part.sums),
               "max": max_sum(part), "min": min_sum(part), **extra}
        print(format_record(rec), file=out)
        return EXIT_OK
    for j, (p, s) in enumerate(zip(part.parts, part.sums), start=1):
        print(f"part {j}: indices={index_set(p)} sum={s}", file=out)
    print(f"max={max_sum(part)} min={min_sum(part)}", file=out)
    if "capacity" in extra:
        print(f"capacity={extra['capacity']}", file=out)
    return EXIT_OK


def cmd_schedule(args, out):
    inst = read_precedence(args.file)
    sched = schedule(inst, POLICIES[args.policy])
    finish = sched.machine_finish_times()
    if args.machine:
        jobs = "|".join(
            ",".join(f"{jid}@{a.start}-{a.finish}" for jid, a in seq) or "-"
            for seq in sched.machine_sequences()
        )
        print(format_record({"policy": args.policy, "m": inst.m, "machines": jobs,
                             "finish": ints(finish), "makespan": sched.makespan}), file=out)
        return EXIT_OK
    print(f"policy={args.policy} m={inst.m}", file=out)
    for k, seq in enumerate(sched.machine_sequences()):
        fields = [f"{jid}[{a.start}-{a.finish}]" for jid, a in seq] + [f"finish={finish[k]}"]
        print(f"machine {k + 1}: " + " ".join(fields), file=out)
    print(f"makespan={sched.makespan}", file=out)
    return EXIT_OK


def _report_check(res, out):
    print(f"before={ints(res.before_sums)}", file=out)
    print(f"after={ints(res.after_sums)}", file=out)
    b, a = res.before_sums, res.after_sums
    details = {
        harness.MAX_DECREASED: f"{max(b)}→{max(a)}",
        harness.MIN_DECREASED: f"{min(b)}→{min(a)}",
        harness.MAX_INCREASED: f"{max(b)}→{max(a)}",
        harness.MIN_INCREASED: f"{min(b)}→{min(a)}",
        harness.NO_DOMINATION: "",
    }
    for cond in sorted(res.violated_conditions):
        print(f"VIOLATION {cond} {details[cond]}".rstrip(), file=out)
    print(f"verdict={res.verdict.value}", file=out)
    return EXIT_OK if res.verdict is harness.Verdict.PASS else EXIT_VIOLATION


def cmd_check(args, out):
    value_form = args.index is not None or args.delta is not None
    if value_form == (args.m2 is not None) or (value_form and (args.index is None or args.delta is None)):
        raise UsageError("give either --index with --delta, or --m2")
    algo = args.algo.lower()
    if algo in POLICIES:
        if value_form:
            raise UsageError("value checks need ls, lpt or multifit; dispatch policies support --m2 only")
        inst = read_precedence(args.file)
        res = harness.check_count_monotone(POLICIES[algo], inst, args.m2)
        print(f"algo={algo} check=count m={inst.m} m2={args.m2}", file=out)
        before = schedule(inst, POLICIES[algo])
        after = schedule(inst.with_m(args.m2), POLICIES[algo])
        print(f"makespan_delta={makespan_delta(before, after):+d}", file=out)
        return _report_check(res, out)
    harness.resolve_algorithm(algo)
    inst = read_instance(args.file)
    if value_form:
        if not 1 <= args.index <= inst.n:
            raise UsageError(f"--index {args.index} out of range 1..{inst.n}")
        if args.delta < 1:
            raise UsageError("--delta must be a positive integer")
        pert = harness.Perturbation(args.index - 1, args.delta)
        res = harness.check_value_monotone(algo, inst, pert)
        print(f"algo={algo} check=value index={args.index} delta={args.delta}", file=out)
        if res.witness is not None:
            print(f"domination=yes permutation={ints(p + 1 for p in res.witness.permutation)}", file=out)
        else:
            print("domination=no", file=out)
        return _report_check(res, out)
    if args.m2 <= inst.m:
        raise UsageError(f"--m2 must exceed m={inst.m}")
    res = harness.check_count_monotone(algo, inst, args.m2)
    print(f"algo={algo} check=count m={inst.m} m2={args.m2}", file=out)
    return _report_check(res, out)


def violation_record(report: harness.ViolationReport) -> str:
    res = report.result
    pert = res.change
    return format_record({
        "violation": "value", "trial": report.trial, "seed": report.seed,
        "algo": res.algorithm.lower(), "m": res.instance.m, "values": ints(res.instance.values),
        "index": pert.index + 1, "epsilon": pert.epsilon,
        "before": ints(res.before_sums), "after": ints(res.after_sums),
        "conditions": ",".join(sorted(res.violated_conditions)),
    })


def cmd_search(args, out):
    seed = args.seed if args.seed is not None else secrets.randbits(63)
    print(f"seed={seed}", file=out, flush=True)
    cfg = harness.SearchConfig(
        args.algo, args.trials, seed,
        n_range=(args.n_min, args.n_max), m_range=(args.m_min, args.m_max),
        value_range=(args.v_min, args.v_max), epsilon_range=(args.eps_min, args.eps_max),
    )
    if args.workers > 1:
        reports = harness.search_anomalies(cfg, workers=args.workers)
    else:
        reports = harness.iter_anomalies(cfg)
    count = 0
    for r in reports:
        print(violation_record(r), file=out, flush=True)
        count += 1
    print(f"trials={cfg.trials} violations={count}", file=out)
    return EXIT_VIOLATION if count else EXIT_OK


def cmd_oracle(args, out):
    inst = read_instance(args.file)
    objective = oracle.Objective(args.objective)
    best = oracle.optimal_partition(inst, objective, budget=args.budget)
    for j, (p, s) in enumerate(zip(best.witness.parts, best.witness.sums), start=1):
        print(f"part {j}: indices={index_set(p)} sum={s}", file=out)
    line = f"objective={args.objective} opt={best.value}"
    if args.compare:
        part, _ = _partition_of(args.compare, inst)
        value = max_sum(part) if objective is oracle.Objective.MIN_MAX else min_sum(part)
        ratio = value / best.value if best.value else (1.0 if value == 0 else float("inf"))
        line += f" algo={value} ratio={ratio:.3f}"
    print(line, file=out)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="monopart", description="Monotonicity checks for number-partitioning heuristics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("partition", help="run LS, LPT or MultiFit on an instance file")
    sp.add_argument("algo", choices=["ls", "lpt", "multifit"])
    sp.add_argument("file")
    sp.add_argument("--machine", action="store_true", help="one key=value record instead of text")
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("schedule", help="list-schedule a precedence file")
    sp.add_argument("file")
    sp.add_argument("--policy", choices=sorted(POLICIES), default="event")
    sp.add_argument("--machine", action="store_true")
    sp.set_defaults(func=cmd_schedule)

    sp = sub.add_parser("check", help="value (--index/--delta) or part-count (--m2) monotonicity check")
    sp.add_argument("algo", help="ls, lpt, multifit, or event / list-order for precedence files")
    sp.add_argument("file")
    sp.add_argument("--index", type=int, help="1-based position to increase")
    sp.add_argument("--delta", type=int, help="positive increase")
    sp.add_argument("--m2", type=int, help="larger part count to compare against")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("search", help="seeded random search for value-monotonicity violations")
    sp.add_argument("algo", choices=["ls", "lpt", "multifit"])
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--seed", type=int, help="64-bit seed (random and printed if omitted)")
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--m-min", type=int, default=2)
    sp.add_argument("--m-max", type=int, default=5)
    sp.add_argument("--v-min", type=int, default=1)
    sp.add_argument("--v-max", type=int, default=100)
    sp.add_argument("--eps-min", type=int, default=1)
    sp.add_argument("--eps-max", type=int, default=20)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("oracle", help="exact optimum by exhaustive enumeration")
    sp.add_argument("file")
    sp.add_argument("--objective", choices=["minmax", "maxmin"], default="minmax")
    sp.add_argument("--compare", choices=["ls", "lpt", "multifit"])
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (ParseError, UsageError, InstanceError, LengthMismatchError, CyclicDependencyError,
            oracle.BudgetExceededError, harness.UnknownAlgorithmError, ValueError, OSError) as exc:
        print(f"monopart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # exit-code contract: nothing outside 0/1/2
        print(f"monopart: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
