import itertools
import random

import pytest
from hypothesis import given

from monopart.algos import UnpackableItemError, run_ffd, run_ls, run_lpt, run_multifit
from monopart.core import Instance
from monopart.oracle import (
    BudgetExceededError,
    Objective,
    dominates_bruteforce,
    ffd_classic,
    optimal_partition,
)

from conftest import instances


def best_two_way_split(values):
    """Independent check for m=2: scan every subset as a bitmask."""
    total = sum(values)
    best = total
    for mask in range(1 << len(values)):
        a = sum(v for k, v in enumerate(values) if mask >> k & 1)
        best = min(best, max(a, total - a))
    return best


@pytest.mark.parametrize(
    "values, expected", [((18, 10, 6, 4), 20), ((18, 10, 9, 4), 22), ((7, 7), 7)]
)
def test_minmax_examples(values, expected):
    assert best_two_way_split(values) == expected
    res = optimal_partition(Instance(values, 2), Objective.MIN_MAX)
    assert res.value == expected
    res.witness.validate(Instance(values, 2))
    assert max(res.witness.sums) == expected


def test_minmax_witness_example():
    res = optimal_partition(Instance((18, 10, 6, 4), 2), Objective.MIN_MAX)
    assert sorted(res.witness.sums) == [18, 20]
    res = optimal_partition(Instance((18, 10, 9, 4), 2), Objective.MIN_MAX)
    assert set(res.witness.parts) == {frozenset({0, 3}), frozenset({1, 2})}


def test_maxmin_witness_consistent():
    res = optimal_partition(Instance((5, 4, 3, 3, 2), 3), Objective.MAX_MIN)
    assert min(res.witness.sums) == res.value == 5


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        optimal_partition(Instance(tuple(range(1, 12)), 4), Objective.MIN_MAX, budget=1000)


def test_pinning_reduces_evaluations():
    res = optimal_partition(Instance((1, 2, 3, 4), 3), Objective.MIN_MAX)
    assert res.evaluations == 3**3


@given(instances(max_n=6, max_m=3, max_value=30))
def test_sandwich(inst):
    lo = optimal_partition(inst, Objective.MIN_MAX).value
    hi = optimal_partition(inst, Objective.MAX_MIN).value
    for sums in (run_ls(inst)[0].sums, run_lpt(inst)[0].sums, run_multifit(inst).partition.sums):
        assert lo <= max(sums)
        assert hi >= min(sums)


def test_pinning_matches_unpinned_enumeration():
    inst = Instance((9, 7, 6, 5, 5, 2), 3)
    full = min(
        max(sum(v for v, b in zip(inst.values, lab) if b == k) for k in range(3))
        for lab in itertools.product(range(3), repeat=inst.n)
    )
    assert optimal_partition(inst, Objective.MIN_MAX).value == full


def test_bruteforce_examples_and_limits():
    assert dominates_bruteforce((22, 19), (18, 20))
    assert not dominates_bruteforce((1, 5), (2, 3))
    assert dominates_bruteforce((4, 4, 1), (4, 4, 1))
    with pytest.raises(ValueError):
        dominates_bruteforce(tuple(range(9)), tuple(range(9)))


def test_ffd_classic_examples():
    p = ffd_classic((44, 24, 24, 22, 21, 17, 8, 8, 6, 6), 60)
    assert p.bin_sums == (60, 60, 60)
    assert ffd_classic((7,), 7).bins == (frozenset({0}),)
    with pytest.raises(UnpackableItemError):
        ffd_classic((8, 3), 7)


def test_ffd_classic_matches_pass_based():
    rnd = random.Random(7)
    for _ in range(200):
        values = [rnd.randint(1, 50) for _ in range(rnd.randint(1, 20))]
        c = 2 * max(values)
        assert ffd_classic(values, c) == run_ffd(values, c)
