"""Integer helpers: deterministic primality, bounded factorization, sieves.

Everything operates on plain Python ints, so there is no overflow anywhere;
the only hard limit is the trial-division bound used to keep factorization
of user-supplied moduli at desk scale.
"""

from __future__ import annotations

DEFAULT_TRIAL_DIVISOR_LIMIT = 10**6
# Full factorization is certified for n <= limit**2: once every divisor up
# to sqrt(n) <= limit has been tried, a leftover cofactor must be prime.


class InvalidModulus(ValueError):
    """A modulus that is not a positive integer."""


class FactorizationOverflow(ValueError):
    """An integer too large to factor within the trial-division bound."""


# Witness set for which the strong-pseudoprime test is known to be exact
# for every n < 3.3 * 10**24 -- far beyond any modulus accepted above.
_STRONG_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (strong pseudoprime test, fixed bases)."""
    if n < 2:
        return False
    for p in _STRONG_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _STRONG_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int, limit: int = DEFAULT_TRIAL_DIVISOR_LIMIT) -> dict[int, int]:
    """Factor ``n`` by trial division; keys are primes in increasing order.

    Supports ``n`` up to ``limit**2`` (default 10**12); anything larger
    raises :class:`FactorizationOverflow` rather than running forever or
    returning an uncertified factorization.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidModulus(f"expected a positive integer, got {n!r}")
    if n > limit * limit:
        raise FactorizationOverflow(
            f"{n} exceeds the factorization bound {limit}**2 = {limit * limit}"
        )
    factors: dict[int, int] = {}
    remaining = n
    d = 2
    while d * d <= remaining:
        if remaining % d == 0:
            e = 0
            while remaining % d == 0:
                remaining //= d
                e += 1
            factors[d] = e
        d += 1 if d == 2 else 2
    if remaining > 1:
        factors[remaining] = 1
    return factors


def is_squarefree(n: int, limit: int = DEFAULT_TRIAL_DIVISOR_LIMIT) -> bool:
    """True when no prime divides ``n`` twice."""
    return all(e == 1 for e in factorize(n, limit).values())


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, by sieve."""
    if n < 2:
        return []
    composite = bytearray(n + 1)
    out = []
    for p in range(2, n + 1):
        if composite[p]:
            continue
        out.append(p)
        for q in range(p * p, n + 1, p):
            composite[q] = 1
    return out
