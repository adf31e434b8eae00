"""Partitions of nonnegative coweights (vector partitions) and Jordan types.

A partition of ``nu`` is a multiset of nonzero nonnegative coweights with
sum ``nu``.  It is stored canonically as a tuple of coweight tuples sorted
lexicographically nonincreasing; the empty tuple is the unique partition of 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import CapExceeded, NotDominantSum, RankMismatch
from .rootdata import box, is_nonnegative

DEFAULT_CAP = 10**6


def canonical(parts) -> tuple:
    """Canonical (sorted, validated) form of a multiset of coweights."""
    parts = tuple(sorted((tuple(int(x) for x in p) for p in parts), reverse=True))
    for p in parts:
        if not any(p) or not is_nonnegative(p):
            raise NotDominantSum(f"part {p} must be nonzero with nonnegative coordinates")
    if parts and len({len(p) for p in parts}) != 1:
        raise RankMismatch("parts of different ranks")
    return parts


def partition_sum(gamma, rank: int) -> tuple:
    total = [0] * rank
    for p in gamma:
        if len(p) != rank:
            raise RankMismatch(f"part {p} does not have rank {rank}")
        for i, x in enumerate(p):
            total[i] += x
    return tuple(total)


def _check_nu(nu):
    nu = tuple(int(x) for x in nu)
    if not is_nonnegative(nu):
        raise NotDominantSum(f"{nu} has a negative coordinate")
    return nu


def iter_partitions(nu):
    """Generate the partitions of ``nu`` in lexicographically decreasing order.

    Parts are chosen in nonincreasing order, so each multiset is produced
    exactly once without deduplication.
    """
    nu = _check_nu(nu)
    candidates = [v for v in box(nu) if any(v)]
    candidates.reverse()

    def rec(rest, start, chosen):
        if not any(rest):
            yield tuple(chosen)
            return
        for i in range(start, len(candidates)):
            v = candidates[i]
            if all(x >= y for x, y in zip(rest, v)):
                chosen.append(v)
                yield from rec(tuple(x - y for x, y in zip(rest, v)), i, chosen)
                chosen.pop()

    yield from rec(nu, 0, [])


def enumerate_partitions(nu, cap: int = DEFAULT_CAP) -> list:
    out = []
    for gamma in iter_partitions(nu):
        if len(out) >= cap:
            raise CapExceeded(f"more than {cap} partitions of {tuple(nu)}")
        out.append(gamma)
    return out


def count_table(bound) -> dict:
    """Partition counts for every ``0 <= lam <= bound`` from one knapsack sweep."""
    bound = _check_nu(bound)
    parts = [v for v in box(bound) if any(v)]
    flat = kernels.knapsack_count(bound, parts)
    return dict(zip(box(bound), flat))


def count_partitions(nu) -> int:
    nu = _check_nu(nu)
    return count_table(nu)[nu]


def concat(gamma1, gamma2) -> tuple:
    """Multiset union of two partitions."""
    if gamma1 and gamma2 and len(gamma1[0]) != len(gamma2[0]):
        raise RankMismatch("partitions of different ranks")
    return tuple(sorted(tuple(gamma1) + tuple(gamma2), reverse=True))


@dataclass(frozen=True)
class ColoredDivisor:
    """Finitely many distinct points, each carrying a nonzero nonnegative coweight."""

    support: tuple

    def __post_init__(self):
        support = tuple((pid, tuple(int(x) for x in w)) for pid, w in self.support)
        ids = [pid for pid, _ in support]
        if len(set(ids)) != len(ids):
            raise ValueError("repeated point identifier")
        canonical(w for _, w in support)
        object.__setattr__(self, "support", support)

    def total(self, rank: int) -> tuple:
        return partition_sum([w for _, w in self.support], rank)


def jordan_type(divisor) -> tuple:
    """Multiset of the coweights of a colored divisor (points forgotten)."""
    if not isinstance(divisor, ColoredDivisor):
        divisor = ColoredDivisor(tuple(divisor))
    return canonical(w for _, w in divisor.support)


def jordan_type_integer(multiplicities) -> tuple:
    """Integer partition recording the multiplicities of a divisor on a curve."""
    mult = [int(m) for m in multiplicities]
    if any(m <= 0 for m in mult):
        raise ValueError("multiplicities must be positive")
    return tuple(sorted(mult, reverse=True))

