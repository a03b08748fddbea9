"""Exact and modular evaluation of Fibonacci and Lucas numbers.

Everything scan-facing works on residue pairs (F_n mod m, F_{n+1} mod m)
produced by fast doubling, so the cost of any single evaluation is
O(log n) multiplications.  Exact integer evaluation is deliberately capped
at small indices; larger values are only ever touched through residues.
"""

from typing import NamedTuple

MAX_INDEX = 2**63 - 1  # largest accepted sequence index
MAX_MODULUS = 2**62 - 1  # residue products of two args < m stay below 2**124
EXACT_CAP = 180  # F_180 and L_180 still fit unsigned 128-bit words


class FibPairMod(NamedTuple):
    """Consecutive Fibonacci residues, the fast-doubling state."""

    n: int
    m: int
    f: int  # F_n mod m
    f_next: int  # F_{n+1} mod m


class LucasPairMod(NamedTuple):
    """Consecutive Lucas residues (L_n mod m, L_{n+1} mod m)."""

    n: int
    m: int
    l: int
    l_next: int


def _check_index(n: int) -> None:
    if not 0 <= n <= MAX_INDEX:
        raise ValueError(f"sequence index out of range [0, 2^63): {n}")


def _check_modulus(m: int) -> None:
    if not 1 <= m <= MAX_MODULUS:
        raise ValueError(f"modulus out of range [1, 2^62): {m}")


def _fib_doubling(n: int, m: int) -> tuple[int, int]:
    # Hot path shared by every scanner predicate; keep it allocation-free.
    # F_2k = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2.
    if m == 1:
        return 0, 0
    a, b = 0, 1
    for i in range(n.bit_length() - 1, -1, -1):
        t = a * ((2 * b - a) % m) % m
        u = (a * a + b * b) % m
        if (n >> i) & 1:
            a, b = u, (t + u) % m
        else:
            a, b = t, u
    return a, b


def fib_pair_mod(n: int, m: int) -> FibPairMod:
    """Return (F_n mod m, F_{n+1} mod m) by fast doubling."""
    _check_index(n)
    _check_modulus(m)
    f, f_next = _fib_doubling(n, m)
    return FibPairMod(n, m, f, f_next)


def lucas_pair_mod(n: int, m: int) -> LucasPairMod:
    """Return (L_n mod m, L_{n+1} mod m).

    Derived from the Fibonacci pair through L_n = 2 F_{n+1} - F_n and
    L_{n+1} = 2 F_n + F_{n+1} rather than by a native Lucas doubling.
    """
    _check_index(n)
    _check_modulus(m)
    f, f_next = _fib_doubling(n, m)
    return LucasPairMod(n, m, (2 * f_next - f) % m, (2 * f + f_next) % m)


def _build_fib_table(top: int) -> tuple[int, ...]:
    vals = [0, 1]
    while len(vals) <= top:
        vals.append(vals[-1] + vals[-2])
    return tuple(vals)


# F_0 .. F_181; L_n = F_{n-1} + F_{n+1} needs one index of headroom.
_FIB = _build_fib_table(EXACT_CAP + 1)


def fib_exact(n: int) -> int:
    """Exact F_n for n <= 180; larger indices must go through residues."""
    if n < 0:
        raise ValueError(f"negative index: {n}")
    if n > EXACT_CAP:
        raise ValueError(f"index too large for exact evaluation (max {EXACT_CAP}): {n}")
    return _FIB[n]


def lucas_exact(n: int) -> int:
    """Exact L_n for n <= 180."""
    if n < 0:
        raise ValueError(f"negative index: {n}")
    if n > EXACT_CAP:
        raise ValueError(f"index too large for exact evaluation (max {EXACT_CAP}): {n}")
    if n == 0:
        return 2
    return _FIB[n - 1] + _FIB[n + 1]


def fib_sum_mod(n: int, m: int) -> int:
    """(F_1 + F_2 + ... + F_n) mod m, computed as (F_{n+2} - 1) mod m.

    Never evaluated by summation; the closed form keeps it O(log n).
    The n = 0 empty sum is consistent: F_2 - 1 = 0.
    """
    _check_index(n)
    _check_modulus(m)
    f, _ = _fib_doubling(n + 2, m)
    return (f + m - 1) % m


def lucas_sum_mod(n: int, m: int) -> int:
    """(L_1 + L_2 + ... + L_n) mod m, computed as (L_{n+2} - 3) mod m."""
    _check_index(n)
    _check_modulus(m)
    f, f_next = _fib_doubling(n + 2, m)
    return ((2 * f_next - f) + 3 * (m - 1)) % m


def legendre5(p: int) -> int:
    """Legendre symbol (p/5) for prime p, read off the residue p mod 5.

    +1 when p = +-1 (mod 5), -1 when p = +-2 (mod 5), 0 exactly at p = 5.
    Primality of p is the caller's responsibility; it is only verified
    under assertions (strip with python -O for hot loops).
    """
    if __debug__:
        from .primes import is_prime

        if not is_prime(p):
            raise ValueError(f"legendre5 expects a prime, got {p}")
    r = p % 5
    if r == 0:
        return 0
    return 1 if r in (1, 4) else -1
