"""Constructive families of indices whose Fibonacci/Lucas average is integral.

Every generator here *verifies* each index it emits (the divisibility is
recomputed, never assumed), so a construction bug cannot silently emit a
non-member.
"""

from typing import NamedTuple

from .sequences import MAX_MODULUS, _fib_doubling, fib_exact, fib_sum_mod, lucas_sum_mod

# F_90 is the largest Fibonacci number below 2^62, so an exact tower value
# F_k is representable only for k <= 90.
_MAX_EXACT_FIB_INDEX = 90


class FamilyParams(NamedTuple):
    """Exponent triple generating the index 2^(alpha+3) * 3^(beta+1) * 5^gamma."""

    alpha: int
    beta: int
    gamma: int

    def index(self) -> int:
        return 2 ** (self.alpha + 3) * 3 ** (self.beta + 1) * 5**self.gamma


class TowerElement(NamedTuple):
    """One level of the self-referential index tower v -> F_{3v}."""

    depth: int
    value: int


def _verified(n: int, lucas: bool) -> int:
    total = lucas_sum_mod(n, n) if lucas else fib_sum_mod(n, n)
    if total != 0:
        kind = "Lucas" if lucas else "Fibonacci"
        raise ArithmeticError(f"constructed index {n} fails the {kind} average test")
    return n


def family_pow2(alpha_max: int) -> list[int]:
    """Indices 3 * 2^(alpha+3) for alpha = 0..alpha_max, each verified a hit."""
    if alpha_max < 0:
        raise ValueError(f"alpha_max must be >= 0, got {alpha_max}")
    if 3 * 2 ** (alpha_max + 3) > MAX_MODULUS:
        raise OverflowError(f"3 * 2^({alpha_max}+3) exceeds the 2^62 index range")
    return [_verified(3 << (a + 3), lucas=False) for a in range(alpha_max + 1)]


def family_235(alpha: int, beta: int, gamma: int) -> int:
    """The verified Fibonacci-average index 2^(alpha+3) * 3^(beta+1) * 5^gamma."""
    n = _params(alpha, beta, gamma).index()
    if n > MAX_MODULUS:
        raise OverflowError(f"2^({alpha}+3) * 3^({beta}+1) * 5^{gamma} exceeds the 2^62 index range")
    return _verified(n, lucas=False)


def family_235_lucas(alpha: int, beta: int, gamma: int) -> int:
    """Same index family, verified against the Lucas prefix sum instead."""
    n = _params(alpha, beta, gamma).index()
    if n > MAX_MODULUS:
        raise OverflowError(f"2^({alpha}+3) * 3^({beta}+1) * 5^{gamma} exceeds the 2^62 index range")
    return _verified(n, lucas=True)


def _params(alpha: int, beta: int, gamma: int) -> FamilyParams:
    if alpha < 0 or beta < 0 or gamma < 0:
        raise ValueError(f"exponents must be >= 0, got ({alpha}, {beta}, {gamma})")
    return FamilyParams(alpha, beta, gamma)


def family_235_grid(limit: int, lucas: bool = False) -> list[int]:
    """All indices 2^(a+3) * 3^(b+1) * 5^c <= limit, ascending and verified."""
    if limit < 24:
        return []
    out = []
    a = 0
    while 2 ** (a + 3) * 3 <= limit:
        b = 0
        while 2 ** (a + 3) * 3 ** (b + 1) <= limit:
            c = 0
            while (n := 2 ** (a + 3) * 3 ** (b + 1) * 5**c) <= limit:
                out.append(_verified(n, lucas))
                c += 1
            b += 1
        a += 1
    return sorted(out)


def tower(depth_max: int) -> list[TowerElement]:
    """Tower elements 2, F_6, F_24, ... while they stay exactly representable.

    Each element v is checked to divide both F_{3v} (the chain-extension
    property) and F_{12v} (membership of 12v-style products).  The list is
    shorter than depth_max once the next value F_{3v} would exceed 2^62;
    the achieved depth is simply len(result).
    """
    if depth_max < 1:
        raise ValueError(f"depth_max must be >= 1, got {depth_max}")
    out: list[TowerElement] = []
    v = 2  # F_3
    depth = 1
    while depth <= depth_max:
        if _fib_doubling(3 * v, v)[0] != 0:
            raise ArithmeticError(f"tower element {v} does not divide F_(3*{v})")
        if _fib_doubling(12 * v, v)[0] != 0:
            raise ArithmeticError(f"tower element {v} does not divide F_(12*{v})")
        out.append(TowerElement(depth, v))
        if 3 * v > _MAX_EXACT_FIB_INDEX:
            break  # next value F_{3v} would not fit the 2^62 range
        v = fib_exact(3 * v)
        depth += 1
    return out
