"""Range scanning for Fibonacci/Lucas average-integrality hits.

Membership of each n is decided independently in O(log n) by fast
doubling (the modulus changes with n, so no sliding-window scheme would
help), which makes scans perfectly partitionable: disjoint chunks merged
in order are identical to a monolithic scan.

Checkpoints carry the accumulated hits, so a resumed scan re-emits the
full stream and is byte-identical to an uninterrupted run no matter where
it was cut.
"""

import json
import os
import tempfile
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple

from .primes import Factorization, factorize, primes_in_range
from .sequences import MAX_MODULUS, _fib_doubling

KIND_FIB = "fib"
KIND_LUCAS = "lucas"

SCHEMA_VERSION = 1
DEFAULT_BLOCK = 1 << 16  # checkpoint cadence in indices


class CheckpointError(Exception):
    """Checkpoint file is corrupt or does not match the requested scan."""


class Hit(NamedTuple):
    n: int
    kind: str


class PairHit(NamedTuple):
    n: int
    t: int


def is_fib_hit(n: int) -> bool:
    """True iff n divides F_1 + ... + F_n, decided as F_{n+2} = 1 (mod n)."""
    if not 1 <= n <= MAX_MODULUS:
        raise ValueError(f"index out of range [1, 2^62): {n}")
    return _fib_doubling(n + 2, n)[0] == 1 % n


def is_lucas_hit(n: int) -> bool:
    """True iff n divides L_1 + ... + L_n, decided as L_{n+2} = 3 (mod n)."""
    if not 1 <= n <= MAX_MODULUS:
        raise ValueError(f"index out of range [1, 2^62): {n}")
    f, f_next = _fib_doubling(n + 2, n)
    return (2 * f_next - f) % n == 3 % n


@dataclass
class ScanCheckpoint:
    """Resumable scan state: everything below next_n is settled."""

    lo: int
    hi: int
    next_n: int
    kind: str
    hits: list[int] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def validate(self) -> None:
        if self.schema_version != SCHEMA_VERSION:
            raise CheckpointError(f"unsupported checkpoint schema_version {self.schema_version}")
        if self.kind not in (KIND_FIB, KIND_LUCAS):
            raise CheckpointError(f"unknown scan kind {self.kind!r}")
        if not 1 <= self.lo <= self.hi <= MAX_MODULUS:
            raise CheckpointError(f"bad checkpoint bounds [{self.lo}, {self.hi}]")
        if not self.lo <= self.next_n <= self.hi + 1:
            raise CheckpointError(f"next_n {self.next_n} outside [{self.lo}, {self.hi + 1}]")
        if any(b <= a for a, b in zip(self.hits, self.hits[1:])):
            raise CheckpointError("checkpoint hits are not strictly ascending")
        if self.hits and (self.hits[0] < self.lo or self.hits[-1] >= self.next_n):
            raise CheckpointError("checkpoint hits outside the settled range")

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": self.schema_version,
                "kind": self.kind,
                "lo": self.lo,
                "hi": self.hi,
                "next_n": self.next_n,
                "hits": self.hits,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ScanCheckpoint":
        try:
            raw = json.loads(text)
            cp = cls(
                lo=raw["lo"],
                hi=raw["hi"],
                next_n=raw["next_n"],
                kind=raw["kind"],
                hits=list(raw["hits"]),
                schema_version=raw["schema_version"],
            )
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise CheckpointError(f"corrupt checkpoint: {exc}") from exc
        cp.validate()
        return cp


def save_checkpoint(cp: ScanCheckpoint, path: str) -> None:
    """Atomic write: the file always holds one complete JSON document."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".ckpt-", dir=directory)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(cp.to_json())
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_checkpoint(path: str) -> ScanCheckpoint:
    with open(path) as fh:
        return ScanCheckpoint.from_json(fh.read())


def _scan_block(args: tuple[str, int, int]) -> list[int]:
    kind, lo, hi = args
    pred = is_fib_hit if kind == KIND_FIB else is_lucas_hit
    return [n for n in range(lo, hi + 1) if pred(n)]


def _blocks(kind: str, start: int, hi: int, block_size: int) -> Iterator[tuple[str, int, int]]:
    for b_lo in range(start, hi + 1, block_size):
        yield kind, b_lo, min(b_lo + block_size - 1, hi)


def scan(
    kind: str,
    lo: int,
    hi: int,
    *,
    resume: ScanCheckpoint | None = None,
    workers: int = 1,
    block_size: int = DEFAULT_BLOCK,
    checkpoint_cb: Callable[[ScanCheckpoint], None] | None = None,
) -> Iterator[Hit]:
    """Yield every hit in [lo, hi] ascending.

    With `resume`, previously settled hits are re-emitted first and work
    restarts at resume.next_n, so the complete stream matches an
    uninterrupted run exactly.  `checkpoint_cb` fires after each settled
    block (every `block_size` indices) and once more at clean completion.
    Worker count never changes the stream: chunks are merged in order.
    """
    if kind not in (KIND_FIB, KIND_LUCAS):
        raise ValueError(f"unknown scan kind {kind!r}")
    if not 1 <= lo <= hi <= MAX_MODULUS:
        raise ValueError(f"bad scan range [{lo}, {hi}]")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    hits_so_far: list[int] = []
    start = lo
    if resume is not None:
        resume.validate()
        if (resume.kind, resume.lo, resume.hi) != (kind, lo, hi):
            raise CheckpointError(
                f"checkpoint is for {resume.kind} [{resume.lo}, {resume.hi}], "
                f"not {kind} [{lo}, {hi}]"
            )
        hits_so_far = list(resume.hits)
        start = resume.next_n
        for n in hits_so_far:
            yield Hit(n, kind)
    if start > hi:
        if checkpoint_cb is not None:
            checkpoint_cb(ScanCheckpoint(lo, hi, hi + 1, kind, list(hits_so_far)))
        return

    def settle(block_hi: int, ns: list[int]) -> None:
        hits_so_far.extend(ns)
        if checkpoint_cb is not None:
            checkpoint_cb(ScanCheckpoint(lo, hi, block_hi + 1, kind, list(hits_so_far)))

    blocks = _blocks(kind, start, hi, block_size)
    if workers == 1:
        for blk in blocks:
            ns = _scan_block(blk)
            settle(blk[2], ns)
            for n in ns:
                yield Hit(n, kind)
        return

    # Bounded in-flight window keeps memory flat on very long scans while
    # preserving block order (the merger is the only serialization point).
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending: deque = deque()
        for blk in blocks:
            pending.append((blk, pool.submit(_scan_block, blk)))
            if len(pending) >= workers * 4:
                done_blk, fut = pending.popleft()
                ns = fut.result()
                settle(done_blk[2], ns)
                for n in ns:
                    yield Hit(n, kind)
        while pending:
            done_blk, fut = pending.popleft()
            ns = fut.result()
            settle(done_blk[2], ns)
            for n in ns:
                yield Hit(n, kind)


def pair_scan(t: int, lo: int, hi: int, *, workers: int = 1) -> Iterator[PairHit]:
    """All n in [lo, hi] such that both n and n+t are Fibonacci hits."""
    if t < 1:
        raise ValueError(f"offset t must be >= 1, got {t}")
    if not 1 <= lo <= hi <= MAX_MODULUS - t:
        raise ValueError(f"bad pair-scan range [{lo}, {hi}] for offset {t}")
    ns = [h.n for h in scan(KIND_FIB, lo, hi + t, workers=workers)]
    present = set(ns)
    for n in ns:
        if n <= hi and n + t in present:
            yield PairHit(n, t)


@dataclass
class OddPrimeAuditReport:
    """No odd prime may be a hit; 2 is exempt (it genuinely is one)."""

    hi: int
    primes_checked: int
    violations: list[int]

    def ok(self) -> bool:
        return not self.violations


def odd_prime_audit(hi: int) -> OddPrimeAuditReport:
    """Check every odd prime p <= hi for (impossible) average integrality."""
    if not 2 <= hi <= MAX_MODULUS:
        raise ValueError(f"audit bound out of range: {hi}")
    checked = 0
    violations = []
    for p in primes_in_range(3, hi):
        checked += 1
        if is_fib_hit(p):
            violations.append(p)
    return OddPrimeAuditReport(hi, checked, violations)


@dataclass
class SquarefreeAuditReport:
    """Every odd hit must be square-free; each one is reported factored."""

    hi: int
    odd_hits: list[tuple[int, Factorization]]
    violations: list[int]

    def ok(self) -> bool:
        return not self.violations


def squarefree_audit(hi: int) -> SquarefreeAuditReport:
    """Factor every odd hit n <= hi and flag any repeated prime."""
    if not 1 <= hi <= MAX_MODULUS:
        raise ValueError(f"audit bound out of range: {hi}")
    odd_hits = []
    violations = []
    for n in range(1, hi + 1, 2):
        if is_fib_hit(n):
            fac = factorize(n)
            odd_hits.append((n, fac))
            if not fac.is_squarefree():
                violations.append(n)
    return SquarefreeAuditReport(hi, odd_hits, violations)


# ---------------------------------------------------------------------------
# Stable output formats (golden-file material: decimal, newline-terminated).


def hit_jsonl(hit: Hit) -> str:
    return json.dumps({"n": hit.n, "kind": hit.kind})


def pair_csv_header() -> str:
    return "n,t"


def pair_csv_line(pair: PairHit) -> str:
    return f"{pair.n},{pair.t}"


def pair_jsonl(pair: PairHit) -> str:
    return json.dumps({"n": pair.n, "t": pair.t})


def bfile_lines(values: Iterable[int], start: int = 1) -> Iterator[str]:
    """OEIS b-file body: 'k a(k)' per line, 1-based, ascending, no header."""
    k = start
    for v in values:
        yield f"{k} {v}"
        k += 1
