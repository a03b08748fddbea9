"""Wall-Sun-Sun prime search: primes p with p^2 | F_{p - (p/5)}.

No such prime is known; every tested prime therefore produces a nonzero
residue, and a zero residue would be a major finding (and must be
reported, not suppressed).  For every p != 5 the *first* power always
divides: p | F_{p - (p/5)}, which doubles as a strong joint self-check of
the doubling arithmetic and the Legendre rule.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .primes import is_prime, primes_in_range
from .sequences import _fib_doubling, legendre5

# p^2 must stay inside the 2^62 modulus range.
MAX_WSS_PRIME = 2**31 - 1


class WssRecord(NamedTuple):
    p: int
    eps: int  # Legendre symbol (p/5)
    residue: int  # F_{p - eps} mod p^2

    @property
    def is_witness(self) -> bool:
        return self.residue == 0


def wss_test(p: int) -> WssRecord:
    """Test one odd prime; the test index at p = 5 is 5 itself (eps = 0)."""
    if p > MAX_WSS_PRIME:
        raise ValueError(f"p must be < 2^31 so p^2 fits the modulus range, got {p}")
    if p == 2 or not is_prime(p):
        raise ValueError(f"wss_test expects an odd prime, got {p}")
    eps = legendre5(p)
    residue = _fib_doubling(p - eps, p * p)[0]
    return WssRecord(p, eps, residue)


@dataclass
class WssScanResult:
    lo: int
    hi: int
    primes_tested: int
    witnesses: list[WssRecord]
    records: list[WssRecord] | None = None

    def ok(self) -> bool:
        return not self.witnesses


def wss_scan(lo: int, hi: int, *, keep_records: bool = False) -> WssScanResult:
    """Test every odd prime in [lo, hi]; 2 is skipped when the range covers it.

    Primes come from a segmented sieve, so memory stays bounded for any
    hi up to 2^31.  Results are in ascending p order.
    """
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if hi > MAX_WSS_PRIME:
        raise ValueError(f"scan bound must be < 2^31, got {hi}")
    tested = 0
    witnesses: list[WssRecord] = []
    records: list[WssRecord] | None = [] if keep_records else None
    for p in primes_in_range(max(lo, 3), hi):
        rec = wss_test(p)
        tested += 1
        if rec.is_witness:
            witnesses.append(rec)
        if records is not None:
            records.append(rec)
    return WssScanResult(lo, hi, tested, witnesses, records)
