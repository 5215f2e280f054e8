"""Perturb, re-run, compare: the monotonicity test engine.

A value check runs an algorithm on ``x`` and on ``x`` with one or more
coordinates increased. It then records whether the new sum vector dominates
the old one, and separately whether the largest and smallest sums decreased.
A count check does the same for a larger number of parts.

Randomised searches draw every trial from its own PCG64 stream, seeded with
``numpy.random.SeedSequence([seed, trial])``. Any trial can therefore be
regenerated on its own, and trials can run in any order or in parallel.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .algos import run_ls, run_lpt, run_multifit
from .core import DominationWitness, Instance, LengthMismatchError, dominates
from .precedence import DispatchPolicy, PrecedenceInstance, schedule

MAX_DECREASED = "max-decreased"
MIN_DECREASED = "min-decreased"
NO_DOMINATION = "no-domination"
MAX_INCREASED = "max-increased"
MIN_INCREASED = "min-increased"

# Decreasing the sixth value of the first instance to 16 raises MultiFit's
# largest sum from 60 to 62. Read upwards (16 -> 17) it is a value anomaly.
MULTIFIT_ANOMALY_VALUES = (44, 24, 24, 22, 21, 16, 8, 8, 6, 6)
MULTIFIT_ANOMALY_M = 3
MULTIFIT_ANOMALY_INDEX = 5
MULTIFIT_ANOMALY_EPSILON = 1


class UnknownAlgorithmError(ValueError):
    pass


def _ls_sums(inst):
    return run_ls(inst)[0].sums


def _lpt_sums(inst):
    return run_lpt(inst)[0].sums


def _multifit_sums(inst):
    return run_multifit(inst).partition.sums


ALGORITHMS = {"LS": _ls_sums, "LPT": _lpt_sums, "MULTIFIT": _multifit_sums}


def resolve_algorithm(name: str) -> str:
    key = str(name).upper()
    if key not in ALGORITHMS:
        raise UnknownAlgorithmError(f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}")
    return key


def output_sums(algo: str, inst: Instance) -> tuple[int, ...]:
    return ALGORITHMS[resolve_algorithm(algo)](inst)


class Verdict(enum.Enum):
    PASS = "PASS"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class Perturbation:
    """Add ``epsilon`` to the value at 0-based position ``index``."""

    index: int
    epsilon: int

    def __post_init__(self):
        if self.epsilon < 1:
            raise ValueError(f"epsilon must be a positive integer, got {self.epsilon}")
        if self.index < 0:
            raise IndexError(f"index must be non-negative, got {self.index}")

    def apply(self, inst: Instance) -> Instance:
        if self.index >= inst.n:
            raise IndexError(f"index {self.index} out of range for n={inst.n}")
        values = list(inst.values)
        values[self.index] += self.epsilon
        return inst.with_values(values)


@dataclass(frozen=True)
class MonotoneCheckResult:
    algorithm: str
    instance: Union[Instance, PrecedenceInstance]
    change: object  # Perturbation, increased value tuple, or new part count
    before_sums: tuple[int, ...]
    after_sums: tuple[int, ...]
    witness: Optional[DominationWitness]
    violated_conditions: frozenset = field(default_factory=frozenset)

    @property
    def verdict(self) -> Verdict:
        return Verdict.VIOLATION if self.violated_conditions else Verdict.PASS

    @property
    def value_monotone(self) -> bool:
        """Both extreme sums moved the right way, whether or not domination holds."""
        return not (self.violated_conditions & {MAX_DECREASED, MIN_DECREASED, MAX_INCREASED, MIN_INCREASED})


def compare_increase(algo, before: Instance, after: Instance, change) -> MonotoneCheckResult:
    """The output for ``after`` (larger inputs) should dominate the output for ``before``."""
    algo = resolve_algorithm(algo)
    s_before = output_sums(algo, before)
    s_after = output_sums(algo, after)
    witness = dominates(s_after, s_before)
    bad = set()
    if witness is None:
        bad.add(NO_DOMINATION)
    if max(s_after) < max(s_before):
        bad.add(MAX_DECREASED)
    if min(s_after) < min(s_before):
        bad.add(MIN_DECREASED)
    return MonotoneCheckResult(algo, before, change, s_before, s_after, witness, frozenset(bad))


def check_value_monotone(algo: str, inst: Instance, pert: Perturbation) -> MonotoneCheckResult:
    return compare_increase(algo, inst, pert.apply(inst), pert)


def check_multi_increase(algo: str, x: Instance, x_prime: Instance) -> MonotoneCheckResult:
    if x.n != x_prime.n or x.m != x_prime.m:
        raise LengthMismatchError("x and x_prime must have the same n and m")
    if any(b < a for a, b in zip(x.values, x_prime.values)):
        raise ValueError("x_prime must be entrywise >= x")
    if x.values == x_prime.values:
        raise ValueError("x_prime must increase at least one coordinate")
    return compare_increase(algo, x, x_prime, x_prime.values)


def _policy(algo):
    if isinstance(algo, DispatchPolicy):
        return algo
    key = str(algo).upper().replace("-", "_")
    aliases = {"EVENT": "EVENT_DRIVEN", "LIST": "LIST_ORDER"}
    try:
        return DispatchPolicy[aliases.get(key, key)]
    except KeyError:
        raise UnknownAlgorithmError(f"unknown dispatch policy {algo!r}") from None


def check_count_monotone(algo, inst, m2: int) -> MonotoneCheckResult:
    """Compare the largest and smallest sums at ``inst.m`` parts and at ``m2``.

    ``algo`` is a partitioning algorithm name with an ``Instance``, or a
    dispatch policy with a ``PrecedenceInstance``; for the latter the sums are
    machine completion times. No domination witness is computed because the
    vectors have different lengths.
    """
    if m2 <= inst.m:
        raise ValueError(f"m2={m2} must exceed m={inst.m}")
    if isinstance(inst, PrecedenceInstance):
        policy = _policy(algo)
        name = policy.name
        before = schedule(inst, policy).machine_finish_times()
        after = schedule(inst.with_m(m2), policy).machine_finish_times()
    else:
        name = resolve_algorithm(algo)
        before = output_sums(name, inst)
        after = output_sums(name, inst.with_m(m2))
    bad = set()
    if max(after) > max(before):
        bad.add(MAX_INCREASED)
    if min(after) > min(before):
        bad.add(MIN_INCREASED)
    return MonotoneCheckResult(name, inst, m2, before, after, None, frozenset(bad))


# --- per-iteration view of the LS argument -----------------------------------


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    failed_step: Optional[int] = None  # iteration count k at which a check failed
    reason: str = ""
    permutations: tuple = ()


def check_ls_trace_domination(inst: Instance, pert: Perturbation) -> TraceCheck:
    """Replay the inductive argument for LS iteration by iteration.

    Before the increased item arrives both runs coincide. After it, a
    permutation ``perm`` with ``after[perm[i]] >= before[i]`` is carried
    forward. If the original run puts item k in bin ``i`` and the perturbed
    run uses bin ``perm[i]``, ``perm`` is kept. Otherwise the perturbed bin is
    ``perm[j]`` for some ``j`` and the entries ``perm[i]`` and ``perm[j]`` are
    swapped. At every step the carried permutation must be a valid witness,
    and the sorted-comparison test must agree.
    """
    before = run_ls(inst)[1]
    after = run_ls(pert.apply(inst))[1]
    j = pert.index
    for k in range(1, j + 1):
        if before.sums_after(k) != after.sums_after(k):
            return TraceCheck(False, k, "runs differ before the increased item")
    if before.steps[j].bin != after.steps[j].bin:
        return TraceCheck(False, j + 1, "increased item placed in a different bin")
    perm = list(range(inst.m))
    history = [tuple(perm)]
    for k in range(j + 1, inst.n + 1):
        s_before, s_after = before.sums_after(k), after.sums_after(k)
        if k > j + 1:
            i = before.steps[k - 1].bin
            target = after.steps[k - 1].bin
            if perm[i] != target:
                other = perm.index(target)
                perm[i], perm[other] = perm[other], perm[i]
        history.append(tuple(perm))
        if not DominationWitness(tuple(perm)).holds(s_after, s_before):
            return TraceCheck(False, k, "carried permutation is not a witness", tuple(history))
        if dominates(s_after, s_before) is None:
            return TraceCheck(False, k, "sorted comparison finds no domination", tuple(history))
    return TraceCheck(True, permutations=tuple(history))


# --- randomised search --------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    algorithm: str
    trials: int
    seed: int
    n_range: tuple[int, int] = (1, 12)
    m_range: tuple[int, int] = (2, 5)
    value_range: tuple[int, int] = (1, 100)
    epsilon_range: tuple[int, int] = (1, 20)

    def __post_init__(self):
        object.__setattr__(self, "algorithm", resolve_algorithm(self.algorithm))
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        for name in ("n_range", "m_range", "value_range", "epsilon_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: {lo} > {hi}")
        if self.n_range[0] < 1 or self.m_range[0] < 2 or self.value_range[0] < 1 or self.epsilon_range[0] < 1:
            raise ValueError("ranges must respect n >= 1, m >= 2, values >= 1, epsilon >= 1")


@dataclass(frozen=True)
class ViolationReport:
    result: MonotoneCheckResult
    seed: int
    trial: int


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def generate_trial(cfg: SearchConfig, trial: int) -> tuple[Instance, Perturbation]:
    if cfg.algorithm == "MULTIFIT" and trial == 0:
        return (
            Instance(MULTIFIT_ANOMALY_VALUES, MULTIFIT_ANOMALY_M),
            Perturbation(MULTIFIT_ANOMALY_INDEX, MULTIFIT_ANOMALY_EPSILON),
        )
    # one draw of uniforms per trial: [n, m, epsilon, index, values...]
    u = trial_rng(cfg.seed, trial).random(4 + cfg.n_range[1]).tolist()

    def pick(x, lo, hi):
        return lo + int(x * (hi - lo + 1))

    n = pick(u[0], *cfg.n_range)
    m = pick(u[1], *cfg.m_range)
    eps = pick(u[2], *cfg.epsilon_range)
    index = pick(u[3], 0, n - 1)
    values = [pick(x, *cfg.value_range) for x in u[4 : 4 + n]]
    return Instance(tuple(values), m), Perturbation(index, eps)


def run_trial(cfg: SearchConfig, trial: int) -> MonotoneCheckResult:
    inst, pert = generate_trial(cfg, trial)
    return check_value_monotone(cfg.algorithm, inst, pert)


def iter_anomalies(cfg: SearchConfig, start: int = 0, stop: Optional[int] = None):
    """Yield a ViolationReport for every violating trial in ``[start, stop)``."""
    for t in range(start, cfg.trials if stop is None else stop):
        res = run_trial(cfg, t)
        if res.violated_conditions:
            yield ViolationReport(res, cfg.seed, t)


def _search_range(cfg, start, stop):
    return list(iter_anomalies(cfg, start, stop))


def search_anomalies(cfg: SearchConfig, workers: int = 1) -> list[ViolationReport]:
    """Run ``cfg.trials`` random value checks and return every violation, ordered by trial."""
    if workers <= 1:
        return list(iter_anomalies(cfg))
    chunk = -(-cfg.trials // (workers * 4))
    bounds = [(s, min(s + chunk, cfg.trials)) for s in range(0, cfg.trials, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_search_range, [cfg] * len(bounds), *zip(*bounds))
        return [r for part in parts for r in part]


def survey_count_monotone(cfg: SearchConfig, extra_parts: int = 1) -> list[ViolationReport]:
    """Compare each trial's instance at ``m`` and ``m + extra_parts`` parts.

    Whether dependency-free algorithms can get worse with more parts is an
    open question, so callers report what this finds and do not assert on it.
    The trial's perturbation is ignored.
    """
    out = []
    for t in range(cfg.trials):
        inst, _ = generate_trial(cfg, t)
        res = check_count_monotone(cfg.algorithm, inst, inst.m + extra_parts)
        if res.violated_conditions:
            out.append(ViolationReport(res, cfg.seed, t))
    return out


def replay(report: ViolationReport, cfg: SearchConfig) -> MonotoneCheckResult:
    if report.seed != cfg.seed:
        raise ValueError("report was produced under a different seed")
    return run_trial(cfg, report.trial)
