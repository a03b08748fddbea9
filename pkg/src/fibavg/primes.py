"""Deterministic primality, factorization and square-freeness for n < 2^62."""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from random import Random
from typing import Iterator

MAX_N = 2**62 - 1

# Miller-Rabin with the first twelve primes as witnesses is exact for all
# n < 3_317_044_064_679_887_385_961_981, far beyond the 2^62 contract.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 100_000


def is_prime(n: int) -> bool:
    """Deterministic primality for the full supported range; is_prime(0) and is_prime(1) are False."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * len(range(start, limit + 1, p))
    return [i for i in range(limit + 1) if flags[i]]


def primes_in_range(lo: int, hi: int, segment_size: int = 1 << 20) -> Iterator[int]:
    """Yield the primes in [lo, hi] ascending, sieving one segment at a time.

    Memory stays O(segment_size + sqrt(hi)) no matter how wide the range is.
    Every composite c has a prime factor p with p*p <= c, so marking from
    max(p*p, first multiple in segment) is complete.
    """
    if hi < 2 or hi < lo:
        return
    lo = max(lo, 2)
    base = sieve_primes(isqrt(hi) + 1)
    for seg_lo in range(lo, hi + 1, segment_size):
        seg_hi = min(seg_lo + segment_size - 1, hi)
        flags = bytearray(b"\x01") * (seg_hi - seg_lo + 1)
        for p in base:
            if p * p > seg_hi:
                break
            start = max(p * p, ((seg_lo + p - 1) // p) * p)
            if start > seg_hi:
                continue
            flags[start - seg_lo :: p] = b"\x00" * len(range(start, seg_hi + 1, p))
        for i, ok in enumerate(flags):
            if ok:
                yield seg_lo + i


@dataclass(frozen=True)
class Factorization:
    """n as an ordered product of prime powers, primes strictly ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(sieve_primes(_TRIAL_LIMIT))


def _brent_rho(n: int, rng: Random) -> int:
    """A nontrivial factor of composite n (Brent's cycle variant of Pollard rho)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = _gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = _gcd(abs(x - ys), n)
        if g != n:
            return g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _rho_split(n: int, counts: dict[int, int], rng: Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    d = _brent_rho(n, rng)
    _rho_split(d, counts, rng)
    _rho_split(n // d, counts, rng)


def factorize(n: int) -> Factorization:
    """Canonical sorted factorization of n >= 1, re-multiplied before return.

    Trial division by primes below 100000 first, then Brent rho (seeded
    from n, so results are reproducible) on whatever composite remains.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"factorize expects 1 <= n < 2^62, got {n}")
    out: list[tuple[int, int]] = []
    left = n
    if left > 1 and not is_prime(left):
        for p in _trial_primes():
            if p * p > left:
                break
            if left % p:
                continue
            e = 0
            while left % p == 0:
                left //= p
                e += 1
            out.append((p, e))
            if left == 1 or is_prime(left):
                break
    if left > 1:
        if is_prime(left):
            out.append((left, 1))
        else:
            counts: dict[int, int] = {}
            _rho_split(left, counts, Random(n))
            out.extend(sorted(counts.items()))
    out.sort()
    fac = Factorization(n, tuple(out))
    check = 1
    for p, e in fac.factors:
        check *= p**e
    if check != n:
        raise ArithmeticError(f"factorization of {n} failed self-check: {fac.factors}")
    return fac


def is_squarefree(n: int) -> bool:
    """True iff no prime divides n twice (vacuously true at n = 1)."""
    return factorize(n).is_squarefree()


def divisors(fac: Factorization) -> list[int]:
    """All divisors of fac.n in ascending order."""
    divs = [1]
    for p, e in fac.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs
