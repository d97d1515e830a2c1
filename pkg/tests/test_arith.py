import pytest

from abelianaut.arith import (
    FactorizationOverflow,
    InvalidModulus,
    factorize,
    is_prime,
    is_squarefree,
    primes_up_to,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}
    for n in range(-3, 42):
        assert is_prime(n) == (n in primes), n


def test_is_prime_matches_sieve_to_10000():
    sieve = set(primes_up_to(10_000))
    for n in range(2, 10_001):
        assert is_prime(n) == (n in sieve), n


def test_is_prime_large():
    assert is_prime(10**12 + 39)  # smallest prime above 10**12
    assert not is_prime(10**12 + 37)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_factorize_basic():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(2**10) == {2: 10}
    assert factorize(999_983) == {999_983: 1}
    # leftover cofactor above the trial-division range is still certified prime
    assert factorize(2 * 1_000_003) == {2: 1, 1_000_003: 1}


def test_factorize_keys_ascending():
    assert list(factorize(2 * 3 * 5 * 49)) == [2, 3, 5, 7]


def test_factorize_rejects_bad_input():
    with pytest.raises(InvalidModulus):
        factorize(0)
    with pytest.raises(InvalidModulus):
        factorize(-6)
    with pytest.raises(FactorizationOverflow):
        factorize(10**12 + 1)


def test_is_squarefree():
    assert is_squarefree(1)
    assert is_squarefree(30)
    assert not is_squarefree(4)
    assert not is_squarefree(18)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
