"""Streaming enumeration of all finite abelian groups, order by order.

Groups of order N correspond one-to-one to choices of an integer
partition per prime power in N's factorization, so the stream is
duplicate-free by construction.  The order of emission is deterministic
and documented, because downstream searches return the first hit and
therefore rely on it for witness minimality.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .arith import DEFAULT_TRIAL_DIVISOR_LIMIT, factorize
from .core import GroupShape, PGroupShape


def partitions(total: int) -> Iterator[tuple[int, ...]]:
    """Every partition of ``total``, each exactly once, parts ascending.

    Emission order is descending lexicographic on the non-increasing
    spelling, reversed to ascending storage: 4 gives (4,), (1, 3),
    (2, 2), (1, 1, 2), (1, 1, 1, 1).
    """
    if total < 1:
        raise ValueError(f"need a positive integer, got {total!r}")
    for parts in _descending(total, total):
        yield parts[::-1]


def _descending(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for head in range(min(remaining, cap), 0, -1):
        for tail in _descending(remaining - head, head):
            yield (head, *tail)


def groups_of_order(
    order: int, limit: int = DEFAULT_TRIAL_DIVISOR_LIMIT
) -> Iterator[GroupShape]:
    """Every abelian group of order exactly ``order``, one per iso class.

    Deterministic: primes ascending, one partition stream per prime, the
    partition of the largest prime varying fastest (itertools.product).
    Order 1 yields exactly the trivial group.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order!r}")
    factors = factorize(order, limit)
    primes = sorted(factors)
    choices = [list(partitions(factors[p])) for p in primes]
    for combo in product(*choices):
        yield GroupShape(tuple(PGroupShape(p, exps) for p, exps in zip(primes, combo)))


def groups_up_to(
    max_order: int, limit: int = DEFAULT_TRIAL_DIVISOR_LIMIT
) -> Iterator[tuple[int, GroupShape]]:
    """(order, group) for every abelian group of order 1..max_order."""
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order!r}")
    for order in range(1, max_order + 1):
        for shape in groups_of_order(order, limit):
            yield order, shape
