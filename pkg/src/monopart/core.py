"""Domain types shared by every module, and the domination relation on sum vectors.

Indices are 0-based throughout the Python API. The CLI and text formats
translate to 1-based positions at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

UINT64_MAX = 2**64 - 1


class InstanceError(ValueError):
    """Base class for invalid number-partitioning instances."""


class EmptyInstanceError(InstanceError):
    pass


class NonPositiveValueError(InstanceError):
    pass


class BinCountError(InstanceError):
    pass


class TotalOverflowError(InstanceError):
    pass


class LengthMismatchError(ValueError):
    pass


def _check_int(v, what):
    # bool is an int subclass; reject it explicitly
    if isinstance(v, bool) or not isinstance(v, int):
        raise InstanceError(f"{what} must be an integer, got {v!r}")


@dataclass(frozen=True)
class Instance:
    """A sequence of positive integers to be split into ``m`` parts."""

    values: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) == 0:
            raise EmptyInstanceError("instance needs at least one value")
        _check_int(self.m, "m")
        if self.m < 2:
            raise BinCountError(f"m must be >= 2, got {self.m}")
        total = 0
        for i, v in enumerate(self.values):
            _check_int(v, f"value #{i}")
            if v < 1:
                raise NonPositiveValueError(f"value #{i} is {v}; values must be >= 1")
            total += v
        if total > UINT64_MAX:
            raise TotalOverflowError(f"total {total} exceeds the unsigned 64-bit range")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def with_values(self, values) -> "Instance":
        return Instance(tuple(values), self.m)

    def with_m(self, m: int) -> "Instance":
        return Instance(self.values, m)


def make_instance(values: Sequence[int], m: int) -> Instance:
    return Instance(tuple(values), m)


@dataclass(frozen=True)
class Partition:
    """``m`` labelled parts, each a frozenset of value indices, plus their sums.

    Empty parts are allowed and have sum 0.
    """

    parts: tuple[frozenset[int], ...]
    sums: tuple[int, ...]

    @classmethod
    def from_parts(cls, values: Sequence[int], parts) -> "Partition":
        parts = tuple(frozenset(p) for p in parts)
        return cls(parts, tuple(sum(values[i] for i in p) for p in parts))

    @property
    def m(self) -> int:
        return len(self.parts)

    def validate(self, inst: Instance) -> None:
        """Raise ``AssertionError`` if the partition is not a consistent cover of ``inst``."""
        assert len(self.parts) == len(self.sums) == inst.m, "wrong number of parts"
        seen: set[int] = set()
        for part, s in zip(self.parts, self.sums):
            assert not (part & seen), "parts overlap"
            seen |= part
            assert sum(inst.values[i] for i in part) == s, "stored sum is stale"
        assert seen == set(range(inst.n)), "parts do not cover the instance"
        assert sum(self.sums) == inst.total


def max_sum(p: Partition) -> int:
    return max(p.sums)


def min_sum(p: Partition) -> int:
    return min(p.sums)


@dataclass(frozen=True)
class DominationWitness:
    """A permutation with ``s[permutation[i]] >= t[i]`` for every ``i``."""

    permutation: tuple[int, ...]

    def holds(self, s: Sequence[int], t: Sequence[int]) -> bool:
        perm = self.permutation
        if len(perm) != len(t) or sorted(perm) != list(range(len(s))):
            return False
        return all(s[perm[i]] >= t[i] for i in range(len(t)))


def dominates(s: Sequence[int], t: Sequence[int]) -> Optional[DominationWitness]:
    """Return a witness that ``s`` dominates ``t``, or None.

    Sorting both vectors ascending and comparing position by position decides
    the relation. If the k-th smallest entry of ``s`` is below the k-th smallest
    of ``t``, the m-k+1 entries of ``t`` at rank >= k all need a partner in
    ``s`` above rank k, and there are only m-k of those.
    """
    if len(s) != len(t):
        raise LengthMismatchError(f"cannot compare vectors of length {len(s)} and {len(t)}")
    order_s = sorted(range(len(s)), key=s.__getitem__)
    order_t = sorted(range(len(t)), key=t.__getitem__)
    perm = [0] * len(t)
    for si, ti in zip(order_s, order_t):
        if s[si] < t[ti]:
            return None
        perm[ti] = si
    return DominationWitness(tuple(perm))
