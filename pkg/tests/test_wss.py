import pytest

from fibavg.primes import sieve_primes
from fibavg.sequences import fib_pair_mod, legendre5
from fibavg.wss import MAX_WSS_PRIME, WssRecord, wss_scan, wss_test


class TestWssTest:
    def test_three(self):
        # eps = -1, F_4 = 3, and 3 mod 9 = 3
        assert wss_test(3) == WssRecord(3, -1, 3)
        assert not wss_test(3).is_witness

    def test_five(self):
        # eps = 0, F_5 = 5, and 5 mod 25 = 5
        assert wss_test(5) == WssRecord(5, 0, 5)

    def test_eleven(self):
        # eps = +1, F_10 = 55 = 5 * 11, and 55 mod 121 = 55
        assert wss_test(11) == WssRecord(11, 1, 55)

    def test_first_power_always_divides(self):
        # p | F_(p - eps) for p != 5, even though p^2 never has so far
        rec = wss_test(101)
        assert rec.residue != 0
        assert rec.residue % 101 == 0

    def test_determinism(self):
        assert wss_test(99991) == wss_test(99991)

    def test_rejects_two_and_composites(self):
        with pytest.raises(ValueError):
            wss_test(2)
        with pytest.raises(ValueError):
            wss_test(9)

    def test_rejects_oversized_prime(self):
        with pytest.raises(ValueError):
            wss_test(2**31 + 11)

    def test_largest_supported_prime(self):
        rec = wss_test(2147483647)
        assert rec.p <= MAX_WSS_PRIME
        assert rec.residue % 2147483647 == 0
        assert not rec.is_witness


class TestWssScan:
    def test_small_range_clean(self):
        result = wss_scan(3, 100)
        assert result.primes_tested == 24
        assert result.witnesses == []
        assert result.ok()
        assert result.records is None

    def test_single_prime_range(self):
        result = wss_scan(5, 5)
        assert result.primes_tested == 1
        assert result.witnesses == []

    def test_two_excluded_from_range(self):
        assert wss_scan(1, 10).primes_tested == 3  # 3, 5, 7

    def test_emit_all_records(self):
        result = wss_scan(3, 30, keep_records=True)
        assert result.records is not None
        assert [r.p for r in result.records] == [3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert all(not r.is_witness for r in result.records)

    def test_rejects_bad_ranges(self):
        with pytest.raises(ValueError):
            wss_scan(10, 1)
        with pytest.raises(ValueError):
            wss_scan(3, 2**31)


def test_first_power_divisibility_sweep():
    # joint self-check of the doubling arithmetic and the Legendre rule
    for p in sieve_primes(2000):
        if p <= 5:
            continue
        eps = legendre5(p)
        assert fib_pair_mod(p - eps, p).f == 0, p
