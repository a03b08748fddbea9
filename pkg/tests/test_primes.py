import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibavg.primes import (
    Factorization,
    divisors,
    factorize,
    is_prime,
    is_squarefree,
    primes_in_range,
    sieve_primes,
)

from oracles import sieve_flags, squarefree_flags, trial_factorize


class TestIsPrime:
    def test_small_conventions(self):
        assert is_prime(2)
        assert not is_prime(0)
        assert not is_prime(1)
        assert not is_prime(-7)

    def test_known_composites(self):
        assert not is_prime(6479)  # 11 * 19 * 31
        assert not is_prime(196559)  # 11 * 107 * 167
        assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7

    def test_known_primes(self):
        for p in (2147483647, 1073741789, 4294967291, 2305843009213693951):
            assert is_prime(p)

    def test_agrees_with_sieve_to_one_million(self):
        flags = sieve_flags(10**6)
        for n in range(10**6 + 1):
            assert is_prime(n) == bool(flags[n]), n


class TestSieves:
    def test_sieve_primes_small(self):
        assert sieve_primes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert sieve_primes(1) == []

    def test_prime_counts(self):
        assert len(sieve_primes(100)) == 25
        assert len(sieve_primes(10**6)) == 78498

    def test_segmented_matches_plain(self):
        assert list(primes_in_range(2, 10**4)) == sieve_primes(10**4)

    def test_segmented_interior_window(self):
        expected = [p for p in sieve_primes(10**5) if 50_000 <= p]
        assert list(primes_in_range(50_000, 10**5)) == expected

    def test_segmented_tiny_segments(self):
        expected = [p for p in sieve_primes(3000) if p >= 100]
        assert list(primes_in_range(100, 3000, segment_size=64)) == expected

    def test_segmented_empty(self):
        assert list(primes_in_range(20, 10)) == []
        assert list(primes_in_range(24, 28)) == []


class TestFactorize:
    @pytest.mark.parametrize(
        "n,factors",
        [
            (77, ((7, 1), (11, 1))),
            (1517, ((37, 1), (41, 1))),
            (720, ((2, 4), (3, 2), (5, 1))),
            (1, ()),
            (2, ((2, 1),)),
            (6479, ((11, 1), (19, 1), (31, 1))),
        ],
    )
    def test_known_factorizations(self, n, factors):
        assert factorize(n).factors == factors

    def test_large_semiprime(self):
        # both factors exceed the trial-division bound, forcing the rho path
        n = 2147483647 * 1073741789
        assert factorize(n).factors == ((1073741789, 1), (2147483647, 1))

    def test_large_square_and_triple(self):
        assert factorize(1000003**2).factors == ((1000003, 2),)
        assert factorize(1000003 * 1000033 * 1000037).factors == (
            (1000003, 1),
            (1000033, 1),
            (1000037, 1),
        )

    def test_deterministic(self):
        n = 2147483647 * 1073741789
        assert factorize(n) == factorize(n)

    def test_bounds(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(2**62)

    def test_matches_trial_division_oracle(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randint(1, 10**9)
            assert list(factorize(n).factors) == trial_factorize(n)

    @given(st.integers(min_value=1, max_value=2**50 - 1))
    @settings(max_examples=300, deadline=None)
    def test_remultiplies(self, n):
        fac = factorize(n)
        product = 1
        for p, e in fac.factors:
            assert e >= 1
            assert is_prime(p)
            product *= p**e
        assert product == n
        assert [p for p, _ in fac.factors] == sorted({p for p, _ in fac.factors})

    def test_remultiplies_bulk(self):
        # wide deterministic sweep over the full supported magnitude range
        rng = random.Random(2024)
        for _ in range(3000):
            n = rng.randint(1, 2**50 - 1)
            fac = factorize(n)
            product = 1
            for p, e in fac.factors:
                product *= p**e
            assert product == n


class TestSquarefree:
    def test_known_values(self):
        assert is_squarefree(323)
        assert not is_squarefree(48)
        assert is_squarefree(1)

    def test_agrees_with_moebius_sieve(self):
        flags = squarefree_flags(10**6)
        for n in range(1, 10**5 + 1):
            assert is_squarefree(n) == bool(flags[n]), n
        rng = random.Random(11)
        for _ in range(10**4):
            n = rng.randint(10**5, 10**6)
            assert is_squarefree(n) == bool(flags[n]), n


def test_divisors_sorted():
    assert divisors(factorize(720))[:6] == [1, 2, 3, 4, 5, 6]
    assert divisors(factorize(720))[-1] == 720
    assert divisors(factorize(1)) == [1]
    assert divisors(factorize(77)) == [1, 7, 11, 77]


def test_factorization_is_value_object():
    fac = factorize(12)
    assert fac == Factorization(12, ((2, 2), (3, 1)))
    assert not fac.is_squarefree()
