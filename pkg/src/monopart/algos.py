"""LS, LPT, FFD at fixed capacity, and MultiFit.

All four are deterministic. Parts are always reported as sets of original
input indices, so duplicate values stay unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Instance, Partition


class UnpackableItemError(ValueError):
    """An item is larger than the bin capacity, so FFD would never terminate."""


@dataclass(frozen=True)
class TraceStep:
    item: int  # original index of the value placed at this iteration
    bin: int
    sums: tuple[int, ...]  # bin sums after the placement


@dataclass(frozen=True)
class LsTrace:
    steps: tuple[TraceStep, ...]
    m: int

    def sums_after(self, k: int) -> tuple[int, ...]:
        """Bin sums after ``k`` placements (``k == 0`` is the all-zero vector)."""
        if k == 0:
            return (0,) * self.m
        return self.steps[k - 1].sums


def _list_schedule(values: Sequence[int], order: Sequence[int], m: int):
    sums = [0] * m
    parts: list[set[int]] = [set() for _ in range(m)]
    steps = []
    for i in order:
        # list.index returns the first occurrence, which is the smallest-index tie-break
        b = sums.index(min(sums))
        sums[b] += values[i]
        parts[b].add(i)
        steps.append(TraceStep(i, b, tuple(sums)))
    partition = Partition(tuple(frozenset(p) for p in parts), tuple(sums))
    return partition, LsTrace(tuple(steps), m)


def run_ls(inst: Instance) -> tuple[Partition, LsTrace]:
    """List Scheduling: each value, in input order, goes to a bin of smallest
    current sum (lowest bin index among ties)."""
    return _list_schedule(inst.values, range(inst.n), inst.m)


def descending_order(values: Sequence[int]) -> list[int]:
    """Indices sorted by decreasing value; equal values keep input order."""
    return sorted(range(len(values)), key=lambda i: -values[i])


def run_lpt(inst: Instance) -> tuple[Partition, LsTrace]:
    """Longest Processing Time first: LS over the stably descending-sorted values."""
    return _list_schedule(inst.values, descending_order(inst.values), inst.m)


@dataclass(frozen=True)
class FfdPacking:
    capacity: int
    bins: tuple[frozenset[int], ...]  # in opening order
    bin_sums: tuple[int, ...]

    @property
    def n_bins(self) -> int:
        return len(self.bins)


def _check_packable(values, capacity):
    if capacity < 1:
        raise UnpackableItemError(f"capacity must be positive, got {capacity}")
    for i, v in enumerate(values):
        if v > capacity:
            raise UnpackableItemError(f"value #{i} = {v} exceeds capacity {capacity}")


def run_ffd(values: Sequence[int], capacity: int) -> FfdPacking:
    """First Fit Decreasing, written as repeated single-bin passes.

    Each pass opens one bin and sweeps the remaining items in decreasing
    order, taking every item that still fits. Passes repeat until nothing is
    left.
    """
    _check_packable(values, capacity)
    remaining = descending_order(values)
    bins, sums = [], []
    while remaining:
        current, load, skipped = set(), 0, []
        for i in remaining:
            if load + values[i] <= capacity:
                current.add(i)
                load += values[i]
            else:
                skipped.append(i)
        bins.append(frozenset(current))
        sums.append(load)
        remaining = skipped
    return FfdPacking(capacity, tuple(bins), tuple(sums))


def ffd_bin_count(values: Sequence[int], capacity: int) -> int:
    return run_ffd(values, capacity).n_bins


@dataclass(frozen=True)
class MultifitResult:
    capacity: int
    partition: Partition
    lower_bound: int
    # Capacity the binary search settled on. It differs from ``capacity`` only
    # when FFD feasibility is non-monotone and a smaller feasible capacity
    # exists below the search boundary.
    search_capacity: Optional[int] = None

    @property
    def guard_triggered(self) -> bool:
        return self.search_capacity is not None and self.search_capacity != self.capacity


def multifit_lower_bound(inst: Instance) -> int:
    return max(-(-inst.total // inst.m), max(inst.values))


def run_multifit(inst: Instance, verify_minimal: bool = True) -> MultifitResult:
    """Smallest integer capacity at which FFD packs everything into at most m bins.

    The search starts at ``L = max(ceil(total/m), max value)``, doubles an
    upper bound until FFD is feasible, then bisects. FFD feasibility is not
    monotone in the capacity, so the bisection boundary need not be the
    smallest feasible capacity. With ``verify_minimal`` (the default) every
    capacity in ``[L, boundary)`` is also tried and the first feasible one
    wins. Fewer than m bins are padded with empty parts.
    """
    values, m = inst.values, inst.m

    def feasible(c):
        return ffd_bin_count(values, c) <= m

    lo = multifit_lower_bound(inst)
    hi = lo
    while not feasible(hi):
        hi *= 2
    # invariant: feasible(hi); every c < left was found infeasible or is below L
    left = lo
    while left < hi:
        mid = (left + hi) // 2
        if feasible(mid):
            hi = mid
        else:
            left = mid + 1
    found = hi
    best = found
    if verify_minimal:
        # found - 1 is already known infeasible (it was the last failed midpoint)
        for c in range(lo, found - 1):
            if feasible(c):
                best = c
                break
    packing = run_ffd(values, best)
    parts = list(packing.bins) + [frozenset()] * (m - packing.n_bins)
    return MultifitResult(best, Partition.from_parts(values, parts), lo, found)
