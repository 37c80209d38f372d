"""Prime tables, the prime-counting function and Goldbach decompositions."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument, OutOfDomain, OutOfRange

__all__ = [
    "PrimeSieve",
    "GoldbachPairSet",
    "build_sieve",
    "prime_count",
    "goldbach_pairs",
    "rosser_interval_holds",
    "prime_factors",
    "rosser_scan",
]


class _PiTable:
    """Read-only view answering ``pi_table[x] = #{primes <= x}``.

    Backed by the sorted prime list rather than a dense count per integer, so a
    sieve to 10**8 costs ~46 MB for the primes instead of 400 MB for a table.
    Accepts an int or an integer array index.
    """

    __slots__ = ("_primes", "_limit")

    def __init__(self, primes: np.ndarray, limit: int):
        self._primes = primes
        self._limit = limit

    def __len__(self) -> int:
        return self._limit + 1

    def __getitem__(self, x):
        if isinstance(x, (int, np.integer)):
            if not 0 <= x <= self._limit:
                raise OutOfRange(f"x={x} outside 0..{self._limit}")
            return int(np.searchsorted(self._primes, x, side="right"))
        xs = np.asarray(x)
        if xs.size and (xs.min() < 0 or xs.max() > self._limit):
            raise OutOfRange(f"index outside 0..{self._limit}")
        return np.searchsorted(self._primes, xs, side="right")


@dataclass(frozen=True)
class PrimeSieve:
    limit: int
    is_prime: np.ndarray = field(repr=False)
    primes: np.ndarray = field(repr=False)

    @property
    def pi_table(self) -> _PiTable:
        return _PiTable(self.primes, self.limit)

    def __contains__(self, x: int) -> bool:
        return 0 <= x <= self.limit and bool(self.is_prime[x])

    def primes_in(self, lo: int, hi: int) -> list[int]:
        """Primes p with lo <= p <= hi, clipped to the sieve."""
        i = np.searchsorted(self.primes, lo, side="left")
        j = np.searchsorted(self.primes, min(hi, self.limit), side="right")
        return [int(p) for p in self.primes[i:j]]


@dataclass(frozen=True)
class GoldbachPairSet:
    target: int
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def build_sieve(limit: int) -> PrimeSieve:
    """Sieve of Eratosthenes over 0..limit (odd-only crossing off)."""
    if limit < 2:
        raise InvalidArgument(f"sieve limit must be >= 2, got {limit}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, int(limit**0.5) + 1, 2):
        if flags[i]:
            flags[i * i :: 2 * i] = False
    flags.setflags(write=False)
    primes = np.flatnonzero(flags).astype(np.int64)
    primes.setflags(write=False)
    return PrimeSieve(limit=limit, is_prime=flags, primes=primes)


def prime_count(s: PrimeSieve, x: int) -> int:
    if x > s.limit:
        raise OutOfRange(f"x={x} exceeds sieve limit {s.limit}")
    if x < 0:
        raise OutOfRange(f"x={x} is negative")
    return s.pi_table[x]


def goldbach_pairs(s: PrimeSieve, target: int) -> GoldbachPairSet:
    """Unordered pairs of distinct odd primes ``p < q`` with ``p + q = target``."""
    if target % 2 or target < 8:
        raise InvalidArgument(f"target must be even and >= 8, got {target}")
    if target > s.limit:
        raise OutOfRange(f"target {target} exceeds sieve limit {s.limit}")
    small = s.primes[(s.primes >= 3) & (2 * s.primes < target)]
    hits = small[s.is_prime[target - small]]
    return GoldbachPairSet(target, frozenset((int(p), target - int(p)) for p in hits))


def rosser_interval_holds(s: PrimeSieve, x: int) -> bool:
    """True iff there is a prime in (6x/7, x].

    Since pi is constant between integers, pi(6x/7) == pi(floor(6x/7)) and the
    comparison stays in integer arithmetic.
    """
    if x < 37:
        raise OutOfDomain(f"the interval bound is stated for x >= 37, got {x}")
    return prime_count(s, x) - prime_count(s, 6 * x // 7) >= 1


def rosser_scan(s: PrimeSieve, lo: int, hi: int) -> np.ndarray:
    """Vectorized ``rosser_interval_holds`` over lo..hi; returns the failing x."""
    if lo < 37:
        raise OutOfDomain(f"the interval bound is stated for x >= 37, got {lo}")
    if hi > s.limit:
        raise OutOfRange(f"x={hi} exceeds sieve limit {s.limit}")
    xs = np.arange(lo, hi + 1, dtype=np.int64)
    pi = s.pi_table
    return xs[pi[xs] - pi[6 * xs // 7] < 1]


def prime_factors(s: PrimeSieve, m: int) -> frozenset[int]:
    """Set of primes dividing ``m`` (empty for m = 1), by trial division over the sieve."""
    if m < 1:
        raise InvalidArgument(f"m must be positive, got {m}")
    if m > s.limit * s.limit:
        raise OutOfRange(f"m={m} too large to factor with a sieve to {s.limit}")
    out = set()
    for p in s.primes:
        p = int(p)
        if p * p > m:
            break
        if m % p == 0:
            out.add(p)
            while m % p == 0:
                m //= p
    if m > 1:
        out.add(m)
    return frozenset(out)
