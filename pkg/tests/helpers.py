"""Independent oracles used by the tests.

These deliberately avoid the library's own code paths: the partition
counter uses the pentagonal-number recurrence instead of generating
partitions, and the multiplicity counter is plain repeated division.
"""

from __future__ import annotations

from functools import lru_cache

from abelianaut import PGroupShape, partitions
from abelianaut.arith import primes_up_to


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via the pentagonal-number recurrence (p(0) = 1)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 == 1 else -1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1
    return total


def multiplicity(n: int, p: int) -> int:
    """Multiplicity of p in n by repeated division."""
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count


def pgroup_shapes(max_group_order: int, tuple_budget: int | None = None):
    """All p-group shapes with order <= max_group_order, optionally also
    requiring order**rank <= tuple_budget."""
    for p in primes_up_to(max_group_order):
        a = 1
        while p**a <= max_group_order:
            for exps in partitions(a):
                shape = PGroupShape(p, exps)
                if tuple_budget is None or shape.order ** shape.rank <= tuple_budget:
                    yield shape
            a += 1
