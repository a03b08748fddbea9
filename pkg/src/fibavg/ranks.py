"""Rank of apparition, Pisano period, and the Lucas entry point.

The rank of apparition rho(m) is the least k >= 1 with m | F_k; it governs
all Fibonacci divisibility through m | F_n <=> rho(m) | n.  The classical
Pisano period (the period of F mod m) is a different quantity; both are
exposed here under their own names so callers never have to guess.
"""

from dataclasses import dataclass
from math import lcm

from .primes import MAX_N, divisors, factorize, is_prime
from .sequences import _fib_doubling, legendre5


@dataclass(frozen=True)
class RankInfo:
    """rho, Pisano period, and (for odd prime powers only) the Lucas rank."""

    m: int
    rho: int
    pisano: int
    sigma: int | None


def _rank_prime(p: int) -> int:
    if p == 2:
        return 3
    if p == 5:
        return 5
    # rho(p) divides p - (p/5); the smallest working divisor is the rank.
    target = p - legendre5(p)
    for d in divisors(factorize(target)):
        if _fib_doubling(d, p)[0] == 0:
            return d
    raise ArithmeticError(f"no rank found below {target} for prime {p}")


def _rank_prime_power(p: int, e: int) -> int:
    r = _rank_prime(p)
    if e == 1:
        return r
    pe = p**e
    # rho(p^e) = rho(p) * p^j for some j <= e-1.  The smallest j that lifts
    # divisibility is found by direct residue checks, so correctness never
    # leans on the (conjectured) absence of Wall-Sun-Sun primes.
    for j in range(e):
        cand = r * p**j
        if _fib_doubling(cand, pe)[0] == 0:
            return cand
    raise ArithmeticError(f"rank lifting failed for {p}^{e}")


def rank_of_apparition(m: int) -> int:
    """Least k >= 1 with m | F_k, for any 2 <= m < 2^62."""
    if m < 2:
        raise ValueError(f"rank of apparition needs m >= 2, got {m}")
    if m > MAX_N:
        raise ValueError(f"modulus out of range [2, 2^62): {m}")
    return lcm(*(_rank_prime_power(p, e) for p, e in factorize(m).factors))


def pisano_period(m: int) -> int:
    """Period of the Fibonacci sequence mod m: least t with F_t = 0, F_{t+1} = 1.

    Equals rho(m) times the multiplicative order of F_{rho(m)+1} mod m.
    That order divides 4, because F_{rho+1}^2 = (-1)^rho (mod m) by the
    Cassini identity, so only three candidates need checking.
    """
    rho = rank_of_apparition(m)
    g = _fib_doubling(rho + 1, m)[0]
    if g == 1:
        return rho
    if g * g % m == 1:
        return 2 * rho
    if pow(g, 4, m) == 1:
        return 4 * rho
    raise ArithmeticError(f"F_(rho+1) mod {m} has order outside {{1,2,4}}")


def lucas_rank(p: int, r: int = 1) -> int | None:
    """Least k with p^r | L_k for an odd prime power, or None when no L_k works.

    The Lucas sequence contains a multiple of p^r exactly when rho(p^r) is
    even, in which case the entry point is rho(p^r)/2 and divisibility
    follows the single residue class k = rho/2 (mod rho).
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"lucas_rank expects an odd prime, got {p}")
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    pe = p**r
    if pe > MAX_N:
        raise ValueError(f"{p}^{r} exceeds the 2^62 modulus range")
    rho = _rank_prime_power(p, r)
    if rho % 2:
        return None
    sigma = rho // 2
    f, f_next = _fib_doubling(sigma, pe)
    if (2 * f_next - f) % pe != 0:
        raise ArithmeticError(f"even-rank criterion violated at {p}^{r}")
    return sigma


def rank_info(m: int) -> RankInfo:
    """Bundle rho and the Pisano period; sigma only when m is an odd prime power."""
    rho = rank_of_apparition(m)
    pisano = pisano_period(m)
    sigma = None
    fac = factorize(m).factors
    if len(fac) == 1 and fac[0][0] != 2:
        sigma = lucas_rank(fac[0][0], fac[0][1])
    return RankInfo(m, rho, pisano, sigma)
