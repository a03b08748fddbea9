import json
import random

import pytest

from fibavg.scanner import (
    DEFAULT_BLOCK,
    KIND_FIB,
    KIND_LUCAS,
    CheckpointError,
    Hit,
    PairHit,
    ScanCheckpoint,
    bfile_lines,
    hit_jsonl,
    is_fib_hit,
    is_lucas_hit,
    load_checkpoint,
    odd_prime_audit,
    pair_csv_header,
    pair_csv_line,
    pair_jsonl,
    pair_scan,
    save_checkpoint,
    scan,
    squarefree_audit,
)

from oracles import hits_by_summation

PUBLISHED_PREFIX = [1, 2, 24, 48, 72, 77, 96]


class TestMembership:
    def test_known_verdicts(self):
        assert is_fib_hit(24)
        assert not is_fib_hit(3)
        assert is_fib_hit(1)
        assert is_fib_hit(2)

    def test_lucas_verdicts(self):
        assert is_lucas_hit(1)
        assert is_lucas_hit(8)  # 1+3+4+7+11+18+29+47 = 120
        assert not is_lucas_hit(3)  # sum 8

    def test_matches_summation_oracle(self):
        limit = 1200
        assert [n for n in range(1, limit + 1) if is_fib_hit(n)] == hits_by_summation(limit)
        assert [n for n in range(1, limit + 1) if is_lucas_hit(n)] == hits_by_summation(limit, lucas=True)

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            is_fib_hit(0)
        with pytest.raises(ValueError):
            is_lucas_hit(2**62)


class TestScan:
    def test_prefix_to_100(self):
        assert [h.n for h in scan(KIND_FIB, 1, 100)] == PUBLISHED_PREFIX

    def test_window_around_1920(self):
        assert [h.n for h in scan(KIND_FIB, 1900, 1930)] == [1920]

    def test_lucas_prefix(self):
        assert [h for h in scan(KIND_LUCAS, 1, 10)] == [Hit(1, "lucas"), Hit(2, "lucas"), Hit(8, "lucas")]

    def test_partition_invariance(self):
        whole = [h.n for h in scan(KIND_FIB, 1, 20000)]
        for chunks in (3, 7):
            bounds = [1 + (20000 * i) // chunks for i in range(chunks)] + [20001]
            merged = []
            for lo, hi in zip(bounds, bounds[1:]):
                merged.extend(h.n for h in scan(KIND_FIB, lo, hi - 1))
            assert merged == whole, chunks

    def test_workers_do_not_change_stream(self):
        single = list(scan(KIND_FIB, 1, 30000, workers=1, block_size=1 << 12))
        multi = list(scan(KIND_FIB, 1, 30000, workers=3, block_size=1 << 12))
        assert single == multi

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            list(scan("neither", 1, 10))
        with pytest.raises(ValueError):
            list(scan(KIND_FIB, 10, 1))
        with pytest.raises(ValueError):
            list(scan(KIND_FIB, 0, 10))
        with pytest.raises(ValueError):
            list(scan(KIND_FIB, 1, 10, workers=0))


class TestCheckpoints:
    def test_json_roundtrip(self):
        cp = ScanCheckpoint(1, 1000, 513, KIND_FIB, [1, 2, 24, 48, 72, 77, 96, 120, 144, 192, 216, 240, 288, 319, 323, 336, 360, 384, 432, 480])
        again = ScanCheckpoint.from_json(cp.to_json())
        assert again == cp

    def test_file_roundtrip(self, tmp_path):
        cp = ScanCheckpoint(1, 500, 501, KIND_LUCAS, [1, 2, 8, 24])
        path = tmp_path / "scan.ckpt"
        save_checkpoint(cp, str(path))
        assert load_checkpoint(str(path)) == cp

    def test_corrupt_json_rejected(self, tmp_path):
        path = tmp_path / "bad.ckpt"
        path.write_text("{not json")
        with pytest.raises(CheckpointError):
            load_checkpoint(str(path))

    def test_missing_fields_rejected(self):
        with pytest.raises(CheckpointError):
            ScanCheckpoint.from_json(json.dumps({"lo": 1, "hi": 10}))

    def test_wrong_schema_version_rejected(self):
        blob = json.dumps({"schema_version": 2, "kind": "fib", "lo": 1, "hi": 10, "next_n": 5, "hits": []})
        with pytest.raises(CheckpointError):
            ScanCheckpoint.from_json(blob)

    def test_bad_invariants_rejected(self):
        with pytest.raises(CheckpointError):
            ScanCheckpoint(1, 10, 12, KIND_FIB, []).validate()
        with pytest.raises(CheckpointError):
            ScanCheckpoint(1, 10, 5, KIND_FIB, [2, 2]).validate()
        with pytest.raises(CheckpointError):
            ScanCheckpoint(1, 10, 5, KIND_FIB, [7]).validate()
        with pytest.raises(CheckpointError):
            ScanCheckpoint(1, 10, 5, "neither", []).validate()

    def test_mismatched_resume_rejected(self):
        cp = ScanCheckpoint(1, 100, 50, KIND_FIB, [1, 2, 24, 48])
        with pytest.raises(CheckpointError):
            list(scan(KIND_FIB, 1, 200, resume=cp))
        with pytest.raises(CheckpointError):
            list(scan(KIND_LUCAS, 1, 100, resume=cp))

    def test_resume_reproduces_full_stream(self):
        checkpoints = []
        full = list(scan(KIND_FIB, 1, 3000, block_size=256, checkpoint_cb=checkpoints.append))
        assert checkpoints[-1].next_n == 3001
        for cp in (checkpoints[0], checkpoints[len(checkpoints) // 2], checkpoints[-2]):
            resumed = list(scan(KIND_FIB, 1, 3000, resume=cp, block_size=256))
            assert resumed == full

    def test_resume_from_finished_checkpoint(self):
        checkpoints = []
        full = list(scan(KIND_FIB, 1, 2000, block_size=512, checkpoint_cb=checkpoints.append))
        resumed = list(scan(KIND_FIB, 1, 2000, resume=checkpoints[-1]))
        assert resumed == full

    def test_checkpoint_cadence(self):
        checkpoints = []
        list(scan(KIND_FIB, 1, DEFAULT_BLOCK * 2 + 10, checkpoint_cb=checkpoints.append))
        assert [cp.next_n for cp in checkpoints] == [
            DEFAULT_BLOCK + 1,
            2 * DEFAULT_BLOCK + 1,
            2 * DEFAULT_BLOCK + 11,
        ]
        for cp in checkpoints:
            cp.validate()


class TestPairScan:
    def test_no_consecutive_pair_below_6000(self):
        assert list(pair_scan(1, 2, 6000)) == []

    def test_first_two_consecutive_pairs(self):
        assert [p.n for p in pair_scan(1, 1, 7000)] == [1, 6479]

    def test_offset_24(self):
        assert [p.n for p in pair_scan(24, 1, 100)] == [24, 48, 72, 96]

    def test_pair_requires_start_within_range(self):
        # 96 + 24 = 120 is a hit, so 96 qualifies even though 120 > hi
        pairs = list(pair_scan(24, 90, 100))
        assert pairs == [PairHit(96, 24)]

    def test_rejects_bad_offset(self):
        with pytest.raises(ValueError):
            list(pair_scan(0, 1, 10))


class TestAudits:
    def test_odd_primes_to_100(self):
        report = odd_prime_audit(100)
        assert report.primes_checked == 24
        assert report.violations == []
        assert report.ok()

    def test_odd_primes_to_3(self):
        report = odd_prime_audit(3)
        assert report.primes_checked == 1
        assert report.violations == []

    def test_two_is_not_audited(self):
        # 2 is an even prime and a genuine hit; the audit must exclude it
        assert is_fib_hit(2)
        report = odd_prime_audit(2)
        assert report.primes_checked == 0
        assert report.violations == []

    def test_squarefree_to_2000(self):
        report = squarefree_audit(2000)
        assert [n for n, _ in report.odd_hits] == [1, 77, 319, 323, 1517]
        facs = {n: fac.factors for n, fac in report.odd_hits}
        assert facs[77] == ((7, 1), (11, 1))
        assert facs[319] == ((11, 1), (29, 1))
        assert facs[323] == ((17, 1), (19, 1))
        assert facs[1517] == ((37, 1), (41, 1))
        assert report.violations == []

    def test_squarefree_to_76(self):
        report = squarefree_audit(76)
        assert [n for n, _ in report.odd_hits] == [1]


class TestFormats:
    def test_hit_jsonl(self):
        assert hit_jsonl(Hit(24, KIND_FIB)) == '{"n": 24, "kind": "fib"}'

    def test_pair_csv(self):
        assert pair_csv_header() == "n,t"
        assert pair_csv_line(PairHit(6479, 1)) == "6479,1"

    def test_pair_jsonl(self):
        assert pair_jsonl(PairHit(6479, 1)) == '{"n": 6479, "t": 1}'

    def test_bfile_lines(self):
        assert list(bfile_lines([1, 2, 24])) == ["1 1", "2 2", "3 24"]


def test_even_hits_at_least_24_are_multiples_of_24():
    hits = [h.n for h in scan(KIND_FIB, 1, 1920)]
    for n in hits:
        if n % 2 == 0 and n >= 24:
            assert n % 24 == 0, n


def test_scan_matches_summation_oracle_window():
    rng = random.Random(17)
    lo = rng.randint(2000, 4000)
    hi = lo + 500
    expected = [n for n in hits_by_summation(hi) if n >= lo]
    assert [h.n for h in scan(KIND_FIB, lo, hi)] == expected
