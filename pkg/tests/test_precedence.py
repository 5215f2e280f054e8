import pytest
from hypothesis import given, strategies as st

from monopart.algos import run_ls
from monopart.core import Instance
from monopart.precedence import (
    CyclicDependencyError,
    DispatchPolicy,
    Job,
    PrecedenceInstance,
    makespan_delta,
    schedule,
)

EVENT, LIST = DispatchPolicy.EVENT_DRIVEN, DispatchPolicy.LIST_ORDER
DEPS = [(3, k) for k in (4, 5, 6, 7)]


def example1(m=3):
    return PrecedenceInstance.build((30, 21, 22, 20, 40, 40, 40, 40, 90), DEPS, m)


def example1_shrunk(m=3):
    return PrecedenceInstance.build((22, 11, 12, 10, 30, 30, 30, 30, 80), DEPS, m)


def test_event_driven_example_one():
    s = schedule(example1(), EVENT)
    s.validate(example1())
    assert s.makespan == 121
    assert s.machine_finish_times() == (121, 121, 112)


def test_event_driven_four_machines():
    assert schedule(example1(4), EVENT).makespan == 150


def test_list_order_shrunk_instance():
    s = schedule(example1_shrunk(), LIST)
    s.validate(example1_shrunk())
    assert s.machine_finish_times() == (52, 81, 131)
    assert s.makespan == 131


def test_event_driven_shrunk_instance_differs():
    s = schedule(example1_shrunk(), EVENT)
    assert s.makespan == 92
    # the 80-job starts on the third machine when it frees up at time 12
    assert s.assignments[8] == (s.assignments[8].__class__(2, 12, 92))


def test_policies_label_schedules():
    assert schedule(example1(), LIST).policy is LIST


def test_makespan_delta():
    before = schedule(example1(), EVENT)
    assert makespan_delta(before, schedule(example1_shrunk(), LIST)) == 10
    assert makespan_delta(before, schedule(example1(4), EVENT)) == 29
    assert makespan_delta(before, before) == 0


def test_cycle_rejected():
    with pytest.raises(CyclicDependencyError):
        PrecedenceInstance.build((1, 2, 3), [(0, 1), (1, 2), (2, 0)], 2)


@pytest.mark.parametrize(
    "jobs, deps, m",
    [
        ((Job("a", 1), Job("a", 2)), (), 2),
        ((Job("a", 0),), (), 2),
        ((Job("a", 1),), (), 0),
        ((Job("a", 1),), (("a", "zz"),), 1),
    ],
)
def test_invalid_instances(jobs, deps, m):
    with pytest.raises(ValueError):
        PrecedenceInstance(jobs, frozenset(deps), m)


@st.composite
def dags(draw, max_jobs=10, topological=True):
    """Edges always run from an earlier to a later job; without ``topological``
    the list order is then shuffled."""
    n = draw(st.integers(1, max_jobs))
    times = draw(st.lists(st.integers(1, 30), min_size=n, max_size=n))
    pairs = [(a, b) for b in range(n) for a in range(b)]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=2 * n)) if pairs else set()
    order = list(range(n))
    if not topological:
        order = draw(st.permutations(order))
    jobs = tuple(Job(i, times[i]) for i in order)
    return PrecedenceInstance(jobs, frozenset(edges), draw(st.integers(1, 4)))


def test_list_order_requires_dependencies_first():
    inst = PrecedenceInstance((Job("b", 2), Job("a", 1)), frozenset({("a", "b")}), 2)
    assert schedule(inst, EVENT).assignments["b"].start == 1
    with pytest.raises(ValueError):
        schedule(inst, LIST)


@given(dags(topological=False))
def test_event_driven_valid_for_any_list_order(inst):
    s = schedule(inst, EVENT)
    s.validate(inst)


@given(dags(), st.sampled_from([EVENT, LIST]))
def test_schedule_valid(inst, policy):
    s = schedule(inst, policy)
    s.validate(inst)
    assert s.makespan == max(a.finish for a in s.assignments.values())


@given(dags(topological=False))
def test_event_driven_is_work_conserving(inst):
    s = schedule(inst, EVENT)
    pred = inst.predecessors()
    events = sorted({0} | {a.finish for a in s.assignments.values()})
    for t in events:
        busy = sum(1 for a in s.assignments.values() if a.start <= t < a.finish)
        waiting = [
            j for j in inst.jobs
            if s.assignments[j.id].start > t
            and all(s.assignments[p].finish <= t for p in pred[j.id])
        ]
        assert not (waiting and busy < inst.m), (t, waiting)


@given(dags(), st.integers(1, 9))
def test_list_order_prefix_determinism(inst, k):
    k = min(k, len(inst.jobs))
    head = inst.jobs[:k]
    ids = {j.id for j in head}
    prefix = PrecedenceInstance(head, frozenset(e for e in inst.deps if e[0] in ids and e[1] in ids), inst.m)
    full = schedule(inst, LIST).assignments
    part = schedule(prefix, LIST).assignments
    assert all(full[j] == part[j] for j in ids)


@given(st.lists(st.integers(1, 100), min_size=1, max_size=12), st.integers(2, 5))
def test_dependency_free_reduces_to_ls(times, m):
    ls_sums = run_ls(Instance(tuple(times), m))[0].sums
    for policy in (EVENT, LIST):
        s = schedule(PrecedenceInstance.build(times, (), m), policy)
        assert s.machine_finish_times() == ls_sums
        assert s.machine_loads() == ls_sums


def test_footnote_makespans_without_dependencies():
    for times, expected in (((30, 21, 22, 20, 40, 40, 40, 40, 90), 160), ((22, 11, 12, 10, 30, 30, 30, 30, 80), 131)):
        for policy in (EVENT, LIST):
            assert schedule(PrecedenceInstance.build(times, (), 3), policy).makespan == expected
