"""Tools for the integer-average indices of the Fibonacci and Lucas sequences.

An index n is a *hit* when n divides F_1 + ... + F_n (equivalently when
F_{n+2} = 1 mod n); Fibonacci hits form OEIS A111035.  The package
evaluates the sequences modularly in O(log n), scans ranges with
resumable checkpoints, computes ranks of apparition and Pisano periods,
verifies the classical identities behind all of it, and searches for
Wall-Sun-Sun primes.
"""

__version__ = "0.1.0"

from .families import FamilyParams, TowerElement, family_235, family_235_grid, family_235_lucas, family_pow2, tower
from .identities import IDENTITY_IDS, IdentityReport, run_identity
from .primes import Factorization, factorize, is_prime, is_squarefree, primes_in_range, sieve_primes
from .ranks import RankInfo, lucas_rank, pisano_period, rank_info, rank_of_apparition
from .scanner import (
    CheckpointError,
    Hit,
    PairHit,
    ScanCheckpoint,
    is_fib_hit,
    is_lucas_hit,
    load_checkpoint,
    odd_prime_audit,
    pair_scan,
    save_checkpoint,
    scan,
    squarefree_audit,
)
from .sequences import (
    FibPairMod,
    LucasPairMod,
    fib_exact,
    fib_pair_mod,
    fib_sum_mod,
    legendre5,
    lucas_exact,
    lucas_pair_mod,
    lucas_sum_mod,
)
from .wss import WssRecord, WssScanResult, wss_scan, wss_test

__all__ = [
    "__version__",
    "CheckpointError",
    "Factorization",
    "FamilyParams",
    "FibPairMod",
    "Hit",
    "IDENTITY_IDS",
    "IdentityReport",
    "LucasPairMod",
    "PairHit",
    "RankInfo",
    "ScanCheckpoint",
    "TowerElement",
    "WssRecord",
    "WssScanResult",
    "factorize",
    "family_235",
    "family_235_grid",
    "family_235_lucas",
    "family_pow2",
    "fib_exact",
    "fib_pair_mod",
    "fib_sum_mod",
    "is_fib_hit",
    "is_lucas_hit",
    "is_prime",
    "is_squarefree",
    "legendre5",
    "load_checkpoint",
    "lucas_exact",
    "lucas_pair_mod",
    "lucas_rank",
    "lucas_sum_mod",
    "odd_prime_audit",
    "pair_scan",
    "pisano_period",
    "primes_in_range",
    "rank_info",
    "rank_of_apparition",
    "run_identity",
    "save_checkpoint",
    "scan",
    "sieve_primes",
    "squarefree_audit",
    "tower",
    "wss_scan",
    "wss_test",
]
