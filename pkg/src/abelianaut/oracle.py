"""Brute-force automorphism counting for small abelian p-groups.

The count comes straight from the definition.  An endomorphism of
Z_{p^e_1} x ... x Z_{p^e_n} is fixed by choosing an image for each
canonical generator, and any choice works as long as the i-th image is
killed by p^e_i; the endomorphism is an automorphism exactly when the
images generate the whole group, because on a finite group a surjective
endomorphism is already bijective.  So: enumerate the image tuples, keep
the ones whose subgroup closure is everything, and count.

Nothing here shares logic with the closed-form path in :mod:`.core` --
no formula, no matrix bookkeeping -- which is what makes agreement
between the two paths meaningful evidence.  The candidate space is
|G|^rank tuples, so an explicit budget guards every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .core import PGroupShape

# One residue per cyclic factor, coordinate i in [0, p^e_i).
ElementVector = tuple[int, ...]

# Precompute the full addition table only while it stays tiny.
_TABLE_LIMIT = 256


@dataclass(frozen=True)
class OracleBudget:
    """Cap on |G|^rank, the raw candidate-tuple count, for one call."""

    max_candidate_tuples: int = 10**6

    def __post_init__(self) -> None:
        if self.max_candidate_tuples < 1:
            raise ValueError("budget must be positive")


class BudgetExceeded(RuntimeError):
    """The candidate space is too large; skip the shape, never estimate."""


def _moduli(shape: PGroupShape) -> list[int]:
    return [shape.p**e for e in shape.exponents]


def _check_vector(vector: Sequence[int], shape: PGroupShape) -> ElementVector:
    v = tuple(vector)
    if len(v) != shape.rank:
        raise ValueError(f"expected {shape.rank} coordinates, got {len(v)}")
    for c, m in zip(v, _moduli(shape)):
        if not 0 <= c < m:
            raise ValueError(f"coordinate {c} out of range [0, {m})")
    return v


def element_order(vector: Sequence[int], shape: PGroupShape) -> int:
    """Least k >= 1 with k * vector = 0; always a power of p.

    Coordinate-wise: a residue divisible by p^t but not p^(t+1) inside
    Z_{p^e} needs p^(e-t) steps to die, and the order is the max over
    coordinates (1 for the identity).
    """
    v = _check_vector(vector, shape)
    p = shape.p
    needed = 0
    for c, e in zip(v, shape.exponents):
        if c == 0:
            continue
        val = 0
        while c % p == 0:
            c //= p
            val += 1
        needed = max(needed, e - val)
    return p**needed


def _closure_size(
    generators: Sequence[ElementVector], moduli: Sequence[int], cap: int
) -> int:
    """Size of the subgroup generated, by closure under addition.

    Quits early once the count reaches ``cap`` (the full group order):
    the closure can never exceed it.
    """
    zero = (0,) * len(moduli)
    seen = {zero}
    queue = [zero]
    head = 0
    while head < len(queue) and len(seen) < cap:
        x = queue[head]
        head += 1
        for g in generators:
            y = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen)


def subgroup_closure(
    generators: Iterable[Sequence[int]], shape: PGroupShape
) -> int:
    """Order of the subgroup the given vectors generate ([] gives 1)."""
    gens = [_check_vector(v, shape) for v in generators]
    return _closure_size(gens, _moduli(shape), shape.order)


def count_automorphisms(
    shape: PGroupShape, budget: OracleBudget | None = None
) -> int:
    """|Aut(G)| by direct enumeration of generator-image tuples.

    Raises :class:`BudgetExceeded` when |G|^rank exceeds the budget; the
    caller is expected to skip the shape, not to approximate.
    """
    if budget is None:
        budget = OracleBudget()
    size = shape.order
    n = shape.rank
    if size**n > budget.max_candidate_tuples:
        raise BudgetExceeded(
            f"|G|^rank = {size}^{n} exceeds the budget of "
            f"{budget.max_candidate_tuples} candidate tuples"
        )
    moduli = _moduli(shape)
    vectors = list(product(*(range(m) for m in moduli)))
    # Slot i admits exactly the elements killed by p^e_i.
    kill = [shape.p**e for e in shape.exponents]
    if size <= _TABLE_LIMIT:
        return _count_indexed(vectors, moduli, kill, shape, size)
    return _count_generic(vectors, moduli, kill, shape, size)


def _count_indexed(
    vectors: list[ElementVector],
    moduli: list[int],
    kill: list[int],
    shape: PGroupShape,
    size: int,
) -> int:
    """Fast path: elements as indices plus a precomputed addition table."""
    index = {v: i for i, v in enumerate(vectors)}
    add = [
        [index[tuple((a + b) % m for a, b, m in zip(u, v, moduli))] for v in vectors]
        for u in vectors
    ]
    slots = [
        [i for i, v in enumerate(vectors) if limit % element_order(v, shape) == 0]
        for limit in kill
    ]
    visited = [0] * size
    queue = [0] * size
    stamp = 0
    count = 0
    for gens in product(*slots):
        stamp += 1
        visited[0] = stamp
        queue[0] = 0
        head = 0
        tail = 1
        while head < tail:
            row = add[queue[head]]
            head += 1
            for g in gens:
                y = row[g]
                if visited[y] != stamp:
                    visited[y] = stamp
                    queue[tail] = y
                    tail += 1
            if tail == size:
                break
        if tail == size:
            count += 1
    return count


def _count_generic(
    vectors: list[ElementVector],
    moduli: list[int],
    kill: list[int],
    shape: PGroupShape,
    size: int,
) -> int:
    """Set-based fallback for groups too large for an addition table."""
    slots = [
        [v for v in vectors if limit % element_order(v, shape) == 0] for limit in kill
    ]
    count = 0
    for gens in product(*slots):
        if _closure_size(gens, moduli, size) == size:
            count += 1
    return count
