"""Slow exhaustive references used to cross-check the fast code paths."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .algos import FfdPacking, UnpackableItemError
from .core import Instance, Partition

DEFAULT_BUDGET = 10**8
MAX_BRUTEFORCE_M = 8


class BudgetExceededError(RuntimeError):
    pass


class Objective(enum.Enum):
    MIN_MAX = "minmax"
    MAX_MIN = "maxmin"


@dataclass(frozen=True)
class OptimalValue:
    objective: Objective
    value: int
    witness: Partition
    evaluations: int


def assignment_count(inst: Instance) -> int:
    # the first item is pinned to part 0, so only the other n-1 items vary
    return inst.m ** (inst.n - 1)


def optimal_partition(inst: Instance, objective: Objective, budget: int = DEFAULT_BUDGET) -> OptimalValue:
    """Exact optimum by enumerating every assignment of items to parts.

    The first item is pinned to part 0; relabelling parts never changes the
    objective, so this loses nothing.
    """
    count = assignment_count(inst)
    if count > budget:
        raise BudgetExceededError(
            f"{inst.m}^{inst.n - 1} = {count} assignments exceeds the budget of {budget}"
        )
    values, m = inst.values, inst.m
    minimize = objective is Objective.MIN_MAX
    best_value = None
    best_labels = None
    for labels in itertools.product(range(m), repeat=inst.n - 1):
        sums = [0] * m
        sums[0] = values[0]
        for v, b in zip(values[1:], labels):
            sums[b] += v
        score = max(sums) if minimize else min(sums)
        if best_value is None or (score < best_value if minimize else score > best_value):
            best_value, best_labels = score, labels
    parts = [set() for _ in range(m)]
    parts[0].add(0)
    for i, b in enumerate(best_labels, start=1):
        parts[b].add(i)
    return OptimalValue(objective, best_value, Partition.from_parts(values, parts), count)


def dominates_bruteforce(s: Sequence[int], t: Sequence[int]) -> bool:
    """Try every permutation."""
    if len(s) != len(t):
        raise ValueError("length mismatch")
    if len(s) > MAX_BRUTEFORCE_M:
        raise ValueError(f"m={len(s)} is too large for factorial enumeration (max {MAX_BRUTEFORCE_M})")
    return any(
        all(s[p[i]] >= t[i] for i in range(len(t)))
        for p in itertools.permutations(range(len(s)))
    )


def ffd_classic(values: Sequence[int], capacity: int) -> FfdPacking:
    """Item-by-item First Fit Decreasing: each item goes into the lowest-indexed
    open bin with room, and a new bin is opened when none has room."""
    for v in values:
        if v > capacity:
            raise UnpackableItemError(f"value {v} exceeds capacity {capacity}")
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    bins: list[set[int]] = []
    loads: list[int] = []
    for i in order:
        for b, load in enumerate(loads):
            if load + values[i] <= capacity:
                bins[b].add(i)
                loads[b] += values[i]
                break
        else:
            bins.append({i})
            loads.append(values[i])
    return FfdPacking(capacity, tuple(frozenset(b) for b in bins), tuple(loads))
