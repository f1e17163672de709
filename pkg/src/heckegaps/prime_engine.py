"""Prime enumeration substrate.

A segmented, odd-only sieve of Eratosthenes over numpy boolean buffers, plus a
deterministic Miller-Rabin check for spot queries.  Every other module in the
package consumes primes through these entry points, so the contract here is
strict: exact output, stable ordering, no probabilistic behaviour.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

# Segment length measured in odd numbers.  1 << 19 odds is a ~0.5 MB boolean
# buffer, small enough to stay in L2 on common hardware.  Correctness must not
# (and does not) depend on this value; tests exercise other segment sizes.
SEGMENT_ODDS = 1 << 19

# Upper bound accepted for range endpoints.
RANGE_LIMIT = 1 << 50

# Deterministic Miller-Rabin witnesses, a verified base set for all n < 2^64
# (the first twelve primes).  Fixed so results are reproducible everywhere.
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimeRange:
    """Primes in a half-open window [lo, hi), ascending."""

    lo: int
    hi: int
    primes: np.ndarray

    def __len__(self) -> int:
        return int(self.primes.size)

    def __iter__(self):
        return iter(int(p) for p in self.primes)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 2^64."""
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_BASES:
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


def _odd_base_primes(limit: int) -> np.ndarray:
    """Odd primes <= limit by a plain boolean sieve (small inputs only)."""
    if limit < 3:
        return np.empty(0, dtype=np.int64)
    # index i represents the odd number 2i + 1; entry 0 (the number 1) is dead
    size = (limit - 1) // 2 + 1
    mask = np.ones(size, dtype=bool)
    mask[0] = False
    for i in range(1, isqrt(limit) // 2 + 1):
        if mask[i]:
            q = 2 * i + 1
            mask[(q * q) // 2 :: q] = False
    return 2 * np.nonzero(mask)[0].astype(np.int64) + 1


def primes_in(lo: int, hi: int, segment_odds: int = SEGMENT_ODDS) -> np.ndarray:
    """All primes in [lo, hi) as an ascending int64 array.

    Segmented sieve: base primes up to sqrt(hi) are found once, then each
    window of ``segment_odds`` odd numbers is cleared with strided slices.
    """
    if not (2 <= lo < hi <= RANGE_LIMIT):
        raise ValueError(f"invalid range [{lo}, {hi}): need 2 <= lo < hi <= 2^50")
    base = _odd_base_primes(isqrt(hi - 1))
    chunks = []
    if lo <= 2 < hi:
        chunks.append(np.array([2], dtype=np.int64))
    start = max(lo, 3)
    start += 1 - (start % 2)  # first odd >= start
    seg_lo = start
    while seg_lo < hi:
        seg_hi = min(seg_lo + 2 * segment_odds, hi)
        n_odds = (seg_hi - seg_lo + 1) // 2
        buf = np.ones(n_odds, dtype=bool)
        for q in base:
            q = int(q)
            if q * q >= seg_hi:
                break
            first = max(q * q, ((seg_lo + q - 1) // q) * q)
            if first % 2 == 0:
                first += q
            if first < seg_hi:
                buf[(first - seg_lo) // 2 :: q] = False
        chunks.append(seg_lo + 2 * np.nonzero(buf)[0].astype(np.int64))
        seg_lo = seg_hi + (1 - seg_hi % 2)
    if not chunks:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(chunks)


def sieve_range(lo: int, hi: int) -> PrimeRange:
    """Exactly the primes in [lo, hi), packaged with their window."""
    return PrimeRange(lo=lo, hi=hi, primes=primes_in(lo, hi))


def prime_count(x: int) -> int:
    """pi(x), the number of primes <= x."""
    if x < 2:
        raise ValueError("prime_count needs x >= 2")
    return int(primes_in(2, x + 1).size)
