"""Executable verifiers for the closed-form Fibonacci/Lucas identities.

Each check uses exact integer arithmetic while the indices stay below the
exact-evaluation cap and residue arithmetic beyond it.  Residue checks of
an equality are accepted only when they hold modulo all three fixed
61-bit primes below, which makes large-index runs reproducible and keeps
the false-positive probability negligible.
"""

from dataclasses import dataclass, field
from random import Random

from .sequences import (
    EXACT_CAP,
    MAX_INDEX,
    _fib_doubling,
    fib_exact,
    lucas_exact,
)

# Fixed public 61-bit primes for residue equality checks.
RESIDUE_PRIMES = (2305843009213693951, 2305843009213693921, 2305843009213693907)

_RANDOM_INDEX_CAP = 10**12  # randomized large-index sampling stays below this


def _fib_mod(n: int, m: int) -> int:
    return _fib_doubling(n, m)[0]


def _lucas_mod(n: int, m: int) -> int:
    f, f_next = _fib_doubling(n, m)
    return (2 * f_next - f) % m


def check_fib_minus_one_products(k: int, m: int | None = None) -> bool:
    """F_{4k+2}-1 = F_{2k} L_{2k+2} and its three companion factorizations.

    Exact while 4k+5 <= 180; otherwise residues mod m, or mod the three
    fixed 61-bit primes when m is None.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    cases = (
        (4 * k + 2, 2 * k, 2 * k + 2),
        (4 * k + 3, 2 * k + 2, 2 * k + 1),
        (4 * k + 4, 2 * k + 3, 2 * k + 1),
        (4 * k + 5, 2 * k + 2, 2 * k + 3),
    )
    if 4 * k + 5 <= EXACT_CAP:
        return all(fib_exact(a) - 1 == fib_exact(i) * lucas_exact(j) for a, i, j in cases)
    moduli = (m,) if m is not None else RESIDUE_PRIMES
    for mod in moduli:
        for a, i, j in cases:
            if (_fib_mod(a, mod) - 1) % mod != _fib_mod(i, mod) * _lucas_mod(j, mod) % mod:
                return False
    return True


def check_lucas_mod4_period(n: int) -> bool:
    """The Lucas sequence mod 4 repeats with period 6: L_n = L_{n+6} (mod 4)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _lucas_mod(n, 4) == _lucas_mod(n + 6, 4)


def check_lucas_odd_triple_mod4(k: int) -> bool:
    """L_{2k+1} + L_{2k+3} + L_{2k+5} is divisible by 4."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    f, f_next = _fib_doubling(2 * k + 1, 4)
    l1, l2 = (2 * f_next - f) % 4, (2 * f + f_next) % 4
    l3 = (l1 + l2) % 4
    l4 = (l2 + l3) % 4
    l5 = (l3 + l4) % 4
    return (l1 + l3 + l5) % 4 == 0


def check_lucas_even_index_mod4(k: int) -> bool:
    """L_{2k+2} is never divisible by 4; when it is even (3 | k+1) it is 2 mod 4."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    v = _lucas_mod(2 * k + 2, 4)
    if v == 0:
        return False
    if (k + 1) % 3 == 0 and v != 2:
        return False
    return True


def check_lucas_shift_product(m: int, n: int, mod: int | None = None) -> bool:
    """L_{m+n} - L_{m-n} equals L_m L_n for odd n and 5 F_m F_n for even n.

    Exact while m+n <= 180, residues beyond (mod, or the fixed primes).
    """
    if n < 1 or m < n:
        raise ValueError(f"need m >= n >= 1, got m={m} n={n}")
    if m + n <= EXACT_CAP:
        lhs = lucas_exact(m + n) - lucas_exact(m - n)
        rhs = lucas_exact(m) * lucas_exact(n) if n % 2 else 5 * fib_exact(m) * fib_exact(n)
        return lhs == rhs
    moduli = (mod,) if mod is not None else RESIDUE_PRIMES
    for q in moduli:
        lhs = (_lucas_mod(m + n, q) - _lucas_mod(m - n, q)) % q
        if n % 2:
            rhs = _lucas_mod(m, q) * _lucas_mod(n, q) % q
        else:
            rhs = 5 * _fib_mod(m, q) % q * _fib_mod(n, q) % q
        if lhs != rhs:
            return False
    return True


def check_fib_index_divisibility(n: int, m: int) -> bool:
    """F_n | F_m exactly when n | m, for 3 <= n <= 90 (so F_n fits the modulus range)."""
    if not 3 <= n <= 90:
        raise ValueError(f"n must be in [3, 90], got {n}")
    if not 0 <= m <= 10**4:
        raise ValueError(f"m must be in [0, 10^4], got {m}")
    fib_divides = _fib_doubling(m, fib_exact(n))[0] == 0
    return fib_divides == (m % n == 0)


def check_fib_12k_multiple_of_24(k: int) -> bool:
    """24 divides F_{12k}."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if 12 * k > MAX_INDEX:
        raise ValueError(f"index 12k out of range: k={k}")
    return _fib_doubling(12 * k, 24)[0] == 0


IDENTITY_IDS = frozenset(
    {
        "fib-minus-one-products",
        "lucas-mod4-period",
        "lucas-odd-triple-mod4",
        "lucas-even-index-mod4",
        "lucas-shift-product",
        "fib-index-divisibility",
        "fib-12k-multiple-of-24",
    }
)


@dataclass
class IdentityReport:
    """Outcome of running one identity over a range plus random samples."""

    identity_id: str
    range_checked: str
    checked: int
    failures: list[dict] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "range_checked": self.range_checked,
            "checked": self.checked,
            "failures": self.failures,
        }


def _run_single(check, lo, hi, samples, rng, lo_min, hi_cap, report):
    for k in range(max(lo, lo_min), min(hi, hi_cap) + 1):
        report.checked += 1
        if not check(k):
            report.failures.append({"k": k})
    for _ in range(samples):
        k = rng.randint(max(lo_min, 1), hi_cap)
        report.checked += 1
        if not check(k):
            report.failures.append({"k": k, "sampled": True})


def run_identity(identity_id: str, lo: int, hi: int, samples: int = 0, seed: int = 0) -> IdentityReport:
    """Exhaustively check an identity on [lo, hi] plus `samples` random draws.

    Random draws use large indices (up to 10^12) under residue arithmetic,
    except for the divisibility equivalence whose domain is intrinsically
    bounded.  The RNG is seeded, so reports are reproducible.
    """
    if identity_id not in IDENTITY_IDS:
        raise ValueError(f"unknown identity {identity_id!r}; choose from {sorted(IDENTITY_IDS)}")
    if lo > hi:
        raise ValueError(f"empty range: [{lo}, {hi}]")
    rng = Random(seed)
    report = IdentityReport(identity_id, f"[{lo}, {hi}]", 0)

    if identity_id == "fib-minus-one-products":
        _run_single(check_fib_minus_one_products, lo, hi, samples, rng, 1, (_RANDOM_INDEX_CAP - 5) // 4, report)
    elif identity_id == "lucas-mod4-period":
        _run_single(check_lucas_mod4_period, lo, hi, samples, rng, 1, _RANDOM_INDEX_CAP, report)
    elif identity_id == "lucas-odd-triple-mod4":
        _run_single(check_lucas_odd_triple_mod4, lo, hi, samples, rng, 0, (_RANDOM_INDEX_CAP - 5) // 2, report)
    elif identity_id == "lucas-even-index-mod4":
        _run_single(check_lucas_even_index_mod4, lo, hi, samples, rng, 0, (_RANDOM_INDEX_CAP - 2) // 2, report)
    elif identity_id == "fib-12k-multiple-of-24":
        _run_single(check_fib_12k_multiple_of_24, lo, hi, samples, rng, 1, _RANDOM_INDEX_CAP // 12, report)
    elif identity_id == "lucas-shift-product":
        for m in range(max(lo, 1), hi + 1):
            for n in range(1, m + 1):
                report.checked += 1
                if not check_lucas_shift_product(m, n):
                    report.failures.append({"m": m, "n": n})
        for _ in range(samples):
            m = rng.randint(1, _RANDOM_INDEX_CAP // 2)
            n = rng.randint(1, m)
            report.checked += 1
            if not check_lucas_shift_product(m, n):
                report.failures.append({"m": m, "n": n, "sampled": True})
    elif identity_id == "fib-index-divisibility":
        for n in range(max(lo, 3), min(hi, 90) + 1):
            for m in range(0, min(hi, 10**4) + 1):
                report.checked += 1
                if not check_fib_index_divisibility(n, m):
                    report.failures.append({"n": n, "m": m})
        for _ in range(samples):
            n = rng.randint(3, 90)
            m = rng.randint(0, 10**4)
            report.checked += 1
            if not check_fib_index_divisibility(n, m):
                report.failures.append({"n": n, "m": m, "sampled": True})
    return report
