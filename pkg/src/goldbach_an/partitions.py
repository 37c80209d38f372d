"""Integer partitions read as cycle types of permutations.

A partition of ``n`` is the multiset of cycle lengths (fixed points included)
of a permutation of degree ``n``. Its element order is the lcm of the parts, it
lies in A_n iff the number of even parts is even, and its S_n class splits into
two A_n classes iff the parts are odd and pairwise distinct (and n > 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Iterator, Literal

from .errors import InvalidArgument, ResourceLimitError

__all__ = [
    "CycleType",
    "Spectrum",
    "MAX_DEGREE",
    "enumerate_cycle_types",
    "partition_number",
    "restricted_partition_count",
    "spectrum",
    "biprimary_cycle_types",
    "biprimary_class_count",
    "alternating_class_count",
]

MAX_DEGREE = 80
# ceiling on the number of partitions a restricted enumeration may walk
MAX_RESTRICTED_COUNT = 20_000_000

Group = Literal["alternating", "symmetric"]
_GROUP_ALIASES = {"A": "alternating", "alternating": "alternating",
                  "S": "symmetric", "symmetric": "symmetric"}


@dataclass(frozen=True)
class CycleType:
    n: int
    parts: tuple[int, ...]
    order: int
    is_even: bool
    splits_in_An: bool

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> CycleType:
        parts = tuple(sorted(parts, reverse=True))
        if not parts or min(parts) < 1:
            raise InvalidArgument(f"parts must be positive integers, got {parts}")
        n = sum(parts)
        is_even = (n - len(parts)) % 2 == 0
        splits = (n > 1 and all(m % 2 for m in parts)
                  and len(set(parts)) == len(parts))
        return cls(n, parts, lcm(*parts), is_even, splits)

    @property
    def an_class_count(self) -> int:
        """Number of A_n classes this type contributes (0 for odd permutations)."""
        if not self.is_even:
            return 0
        return 2 if self.splits_in_An else 1


def _check_degree(n: int) -> None:
    if n < 1:
        raise InvalidArgument(f"degree must be >= 1, got {n}")
    if n > MAX_DEGREE:
        raise ResourceLimitError(
            f"degree {n} exceeds the enumeration bound {MAX_DEGREE}")


def _normalize_group(group: str) -> Group:
    try:
        return _GROUP_ALIASES[group]
    except KeyError:
        raise InvalidArgument(f"unknown group {group!r}") from None


@lru_cache(maxsize=None)
def partition_number(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        g2 = k * (3 * k + 1) // 2
        sign = 1 if k % 2 else -1
        total += sign * (partition_number(n - g1) + partition_number(n - g2))
        k += 1
    return total


def restricted_partition_count(n: int, allowed: Iterable[int]) -> int:
    """Number of partitions of ``n`` with every part in ``allowed``."""
    ways = [1] + [0] * n
    for a in sorted(set(allowed)):
        for s in range(a, n + 1):
            ways[s] += ways[s - a]
    return ways[n]


def _descend(n: int, sizes: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # sizes is strictly decreasing; yields partitions with non-increasing parts
    if n == 0:
        yield ()
        return
    stack: list[int] = []

    def walk(remaining: int, start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, len(sizes)):
            a = sizes[i]
            if a > remaining:
                continue
            stack.append(a)
            if a == remaining:
                yield tuple(stack)
            else:
                yield from walk(remaining - a, i)
            stack.pop()

    yield from walk(n, 0)


def enumerate_cycle_types(
    n: int,
    parity_filter: Literal["even", "odd"] | None = None,
    allowed_parts: Iterable[int] | None = None,
) -> Iterator[CycleType]:
    """Yield every partition of ``n`` once, as a :class:`CycleType`.

    ``parity_filter="even"`` keeps exactly the cycle types realized in A_n.
    ``allowed_parts`` restricts the part sizes; the degree bound then applies to
    the restricted count instead of p(n).
    """
    if parity_filter not in (None, "even", "odd"):
        raise InvalidArgument(f"bad parity filter {parity_filter!r}")
    if allowed_parts is None:
        _check_degree(n)
        sizes = tuple(range(n, 0, -1))
    else:
        if n < 1:
            raise InvalidArgument(f"degree must be >= 1, got {n}")
        sizes = tuple(sorted({a for a in allowed_parts if 1 <= a <= n}, reverse=True))
        if restricted_partition_count(n, sizes) > MAX_RESTRICTED_COUNT:
            raise ResourceLimitError(f"too many restricted partitions of {n}")
    want_even = {None: None, "even": True, "odd": False}[parity_filter]
    for parts in _descend(n, sizes):
        ct = CycleType.from_parts(parts)
        if want_even is None or ct.is_even == want_even:
            yield ct


@dataclass(frozen=True)
class Spectrum:
    n: int
    group: Group
    orders: tuple[int, ...]

    def __contains__(self, m: int) -> bool:
        return m in set(self.orders)


def _spectrum_dp(n: int, alternating: bool) -> set[int]:
    # reach[s] holds (lcm, parity of even-part count) over partitions of s
    reach: list[set[tuple[int, int]]] = [set() for _ in range(n + 1)]
    reach[0].add((1, 0))
    for k in range(1, n + 1):
        flip = 1 - k % 2
        for s in range(k, n + 1):
            src = reach[s - k]
            if src:
                reach[s].update((l * k // gcd(l, k), par ^ flip) for l, par in src)
    return {l for l, par in reach[n] if not (alternating and par)}


def spectrum(n: int, group: str = "alternating", method: str = "dp") -> Spectrum:
    """Set of element orders of A_n or S_n.

    ``method="dp"`` runs an unbounded-knapsack pass over (lcm, parity) states and
    is fast to n ~ 80. ``method="enumerate"`` streams every cycle type; it is the
    direct definition and is kept as a cross-check.
    """
    g = _normalize_group(group)
    _check_degree(n)
    alternating = g == "alternating"
    if method == "dp":
        orders = _spectrum_dp(n, alternating)
    elif method == "enumerate":
        parity = "even" if alternating else None
        orders = {ct.order for ct in enumerate_cycle_types(n, parity)}
    else:
        raise InvalidArgument(f"unknown method {method!r}")
    return Spectrum(n, g, tuple(sorted(orders)))


def _odd_primes_upto(n: int) -> list[int]:
    return [p for p in range(3, n + 1, 2) if all(p % d for d in range(3, int(p**0.5) + 1, 2))]


def biprimary_cycle_types(n: int) -> Iterator[CycleType]:
    """Even cycle types of degree ``n`` whose order is pq for distinct odd primes.

    Such a type only uses parts from {1, p, q, pq}, so each prime pair drives a
    small restricted enumeration; this scales well past the full-enumeration
    bound.
    """
    if n < 1:
        raise InvalidArgument(f"degree must be >= 1, got {n}")
    ps = _odd_primes_upto(n)
    for i, p in enumerate(ps):
        for q in ps[i + 1:]:
            if p + q > n:
                break
            for ct in enumerate_cycle_types(n, "even", allowed_parts=(1, p, q, p * q)):
                if ct.order == p * q:
                    yield ct


def biprimary_class_count(n: int) -> int:
    """Number of A_n classes of elements of order pq, p != q odd primes."""
    return sum(ct.an_class_count for ct in biprimary_cycle_types(n))


def alternating_class_count(n: int) -> int:
    """Number of conjugacy classes of A_n, split classes counted twice."""
    return sum(ct.an_class_count for ct in enumerate_cycle_types(n, "even"))
