"""List scheduling on identical machines with job dependencies.

Two dispatch rules are provided, because "schedule the job on the first
machine that becomes available" admits two readings:

``EVENT_DRIVEN``
    Simulated time. Whenever a machine is idle it takes the first job, in
    list order, whose dependencies have all finished. Simultaneously idle
    machines are served lowest index first. With nothing ready, idle
    machines wait for the next completion.

``LIST_ORDER``
    Jobs are committed strictly in list order. A job's ready time is the
    latest finish among its dependencies, and it goes to the machine that
    lets it start earliest (lowest index among ties). Every dependency must
    appear before its dependent in the list.

Machine indices are 0-based; time is integral.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence


class CyclicDependencyError(ValueError):
    pass


class DispatchPolicy(enum.Enum):
    EVENT_DRIVEN = "event"
    LIST_ORDER = "list-order"


@dataclass(frozen=True)
class Job:
    id: Hashable
    time: int


@dataclass(frozen=True)
class PrecedenceInstance:
    jobs: tuple[Job, ...]
    deps: frozenset[tuple[Hashable, Hashable]]  # (a, b): b needs a finished
    m: int

    def __post_init__(self):
        object.__setattr__(self, "jobs", tuple(self.jobs))
        object.__setattr__(self, "deps", frozenset(self.deps))
        if self.m < 1:
            raise ValueError(f"need at least one machine, got m={self.m}")
        ids = [j.id for j in self.jobs]
        if len(set(ids)) != len(ids):
            raise ValueError("job ids must be unique")
        for j in self.jobs:
            if isinstance(j.time, bool) or not isinstance(j.time, int) or j.time < 1:
                raise ValueError(f"job {j.id!r} has processing time {j.time!r}; need an integer >= 1")
        known = set(ids)
        for a, b in self.deps:
            if a not in known or b not in known:
                raise ValueError(f"dependency {a!r} -> {b!r} names an unknown job")
        _check_acyclic(ids, self.deps)

    @classmethod
    def build(cls, times: Sequence[int], deps: Iterable[tuple[int, int]] = (), m: int = 1):
        """Jobs numbered 0..n-1 in list order."""
        return cls(tuple(Job(i, t) for i, t in enumerate(times)), frozenset(deps), m)

    def with_m(self, m: int) -> "PrecedenceInstance":
        return PrecedenceInstance(self.jobs, self.deps, m)

    def predecessors(self) -> dict:
        pred = {j.id: [] for j in self.jobs}
        for a, b in self.deps:
            pred[b].append(a)
        return pred


def _check_acyclic(ids, deps):
    indeg = {i: 0 for i in ids}
    succ = {i: [] for i in ids}
    for a, b in deps:
        indeg[b] += 1
        succ[a].append(b)
    stack = [i for i in ids if indeg[i] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if seen != len(ids):
        raise CyclicDependencyError("dependency graph contains a cycle")


@dataclass(frozen=True)
class Assignment:
    machine: int
    start: int
    finish: int


@dataclass(frozen=True)
class Schedule:
    assignments: dict  # job id -> Assignment, in commit order
    m: int
    policy: DispatchPolicy

    @property
    def makespan(self) -> int:
        return max((a.finish for a in self.assignments.values()), default=0)

    def machine_finish_times(self) -> tuple[int, ...]:
        """Completion time of each machine (0 for an unused machine)."""
        out = [0] * self.m
        for a in self.assignments.values():
            out[a.machine] = max(out[a.machine], a.finish)
        return tuple(out)

    def machine_loads(self) -> tuple[int, ...]:
        """Busy time of each machine, excluding idle gaps."""
        out = [0] * self.m
        for a in self.assignments.values():
            out[a.machine] += a.finish - a.start
        return tuple(out)

    def machine_sequences(self) -> list[list]:
        seqs = [[] for _ in range(self.m)]
        for jid, a in self.assignments.items():
            seqs[a.machine].append((jid, a))
        for s in seqs:
            s.sort(key=lambda item: item[1].start)
        return seqs

    def validate(self, inst: PrecedenceInstance) -> None:
        times = {j.id: j.time for j in inst.jobs}
        assert set(self.assignments) == set(times)
        for jid, a in self.assignments.items():
            assert 0 <= a.machine < self.m
            assert a.finish == a.start + times[jid] and a.start >= 0
        for a, b in inst.deps:
            assert self.assignments[b].start >= self.assignments[a].finish, (a, b)
        for seq in self.machine_sequences():
            for (_, x), (_, y) in zip(seq, seq[1:]):
                assert x.finish <= y.start, "overlapping jobs on one machine"


def schedule(inst: PrecedenceInstance, policy: DispatchPolicy) -> Schedule:
    if policy is DispatchPolicy.EVENT_DRIVEN:
        return _event_driven(inst)
    if policy is DispatchPolicy.LIST_ORDER:
        return _list_order(inst)
    raise ValueError(f"unknown dispatch policy {policy!r}")


def _list_order(inst):
    pred = inst.predecessors()
    free = [0] * inst.m
    out = {}
    for job in inst.jobs:
        late = [p for p in pred[job.id] if p not in out]
        if late:
            raise ValueError(
                f"list-order dispatch needs dependencies listed first; job {job.id!r} waits on {late[0]!r}"
            )
        ready = max((out[p].finish for p in pred[job.id]), default=0)
        start, machine = min((max(ready, f), k) for k, f in enumerate(free))
        out[job.id] = Assignment(machine, start, start + job.time)
        free[machine] = start + job.time
    return Schedule(out, inst.m, DispatchPolicy.LIST_ORDER)


def _event_driven(inst):
    pred = inst.predecessors()
    waiting = {j.id: len(pred[j.id]) for j in inst.jobs}
    pending = list(inst.jobs)  # unscheduled, in list order
    idle = list(range(inst.m))
    running: list[tuple[int, int, int]] = []  # (finish, machine, list position)
    position = {j.id: k for k, j in enumerate(inst.jobs)}
    succ = {j.id: [] for j in inst.jobs}
    for a, b in inst.deps:
        succ[a].append(b)
    out = {}
    now = 0
    while pending:
        idle.sort()
        for machine in list(idle):
            job = next((j for j in pending if waiting[j.id] == 0), None)
            if job is None:
                break
            pending.remove(job)
            idle.remove(machine)
            out[job.id] = Assignment(machine, now, now + job.time)
            heapq.heappush(running, (now + job.time, machine, position[job.id]))
        if not pending:
            break
        # advance to the next completion and release everything finishing then
        now = running[0][0]
        while running and running[0][0] == now:
            _, machine, pos = heapq.heappop(running)
            idle.append(machine)
            for b in succ[inst.jobs[pos].id]:
                waiting[b] -= 1
    return Schedule(out, inst.m, DispatchPolicy.EVENT_DRIVEN)


def makespan_delta(before: Schedule, after: Schedule) -> int:
    """Positive when the makespan grew."""
    return after.makespan - before.makespan
