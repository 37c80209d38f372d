"""Closed-form centralizers and normalizers of large Sylow subgroups of A_n.

For a prime q with n/2 < q <= n a Sylow q-subgroup Q of A_n is generated by a
single q-cycle. When q <= n - 2 its centralizer is Q x A_{n-q} (order
q (n-q)!/2) and its normalizer has order (q-1) q (n-q)!/2. The π-set
differences between degrees 2n and 2n-1 and the biprimary class counts built on
these live here as well.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import permoracle
from .errors import OutOfDomain, ResourceLimitError
from .partitions import biprimary_class_count, biprimary_cycle_types
from .primes import PrimeSieve, build_sieve, prime_factors

__all__ = [
    "SubgroupProfile",
    "PiSetDelta",
    "pi_of_alternating",
    "sylow_centralizer_order",
    "sylow_normalizer_order",
    "centralizer_primes",
    "normalizer_primes",
    "subgroup_profile",
    "centralizer_pi_delta",
    "dim_U",
    "dim_U_tilde",
    "frobenius_part_mask",
    "frobenius_has_no_pq_element",
]


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % d for d in range(2, math.isqrt(m) + 1))


def pi_of_alternating(m: int) -> frozenset[int]:
    """Primes dividing |A_m| = m!/2."""
    if m <= 2:
        return frozenset()
    if m == 3:
        return frozenset({3})
    return frozenset(p for p in range(2, m + 1) if _is_prime(p))


def _check_sylow_range(n: int, q: int, *, upto: int) -> None:
    if not (_is_prime(q) and q % 2 and 2 * q > n and q <= upto):
        raise OutOfDomain(f"need an odd prime q with n/2 < q <= {upto}; got n={n}, q={q}")


def sylow_centralizer_order(n: int, q: int) -> int:
    """|C_{A_n}(Q)| for n/2 < q <= n: q |A_{n-q}|."""
    _check_sylow_range(n, q, upto=n)
    return q * max(math.factorial(n - q) // 2, 1)


def sylow_normalizer_order(n: int, q: int) -> int:
    """|N_{A_n}(Q)| for n/2 < q <= n.

    (q-1) q (n-q)!/2 while q <= n - 2. With fewer than two spare symbols no odd
    permutation outside Q's support can fix the sign, so only half of AGL(1, q)
    survives: q (q-1)/2.
    """
    _check_sylow_range(n, q, upto=n)
    if n - q >= 2:
        return (q - 1) * q * math.factorial(n - q) // 2
    return q * (q - 1) // 2


def centralizer_primes(n: int, q: int) -> frozenset[int]:
    _check_sylow_range(n, q, upto=n)
    return frozenset({q}) | pi_of_alternating(n - q)


def normalizer_primes(n: int, q: int, s: PrimeSieve | None = None) -> frozenset[int]:
    _check_sylow_range(n, q, upto=n)
    s = s if s is not None and s.limit >= q else build_sieve(max(q, 2))
    return frozenset({q}) | prime_factors(s, q - 1) | pi_of_alternating(n - q)


@dataclass(frozen=True)
class SubgroupProfile:
    n: int
    q: int
    centralizer_order: int
    normalizer_order: int
    centralizer_primes: frozenset[int]
    normalizer_primes: frozenset[int]
    frobenius_part: tuple[int, int]


def subgroup_profile(n: int, q: int, s: PrimeSieve | None = None) -> SubgroupProfile:
    if n < 8:
        raise OutOfDomain(f"subgroup profiles are given for n >= 8, got {n}")
    _check_sylow_range(n, q, upto=n - 2)
    c = sylow_centralizer_order(n, q)
    return SubgroupProfile(
        n=n,
        q=q,
        centralizer_order=c,
        normalizer_order=(q - 1) * c,
        centralizer_primes=centralizer_primes(n, q),
        normalizer_primes=normalizer_primes(n, q, s),
        frobenius_part=(q, q - 1),
    )


@dataclass(frozen=True)
class PiSetDelta:
    """Primes gained by C(Q) and N(Q) when the degree grows from 2n-1 to 2n."""

    n2: int
    q: int
    centralizer_new_primes: frozenset[int]
    normalizer_new_primes: frozenset[int]

    @property
    def agree(self) -> bool:
        return self.centralizer_new_primes == self.normalizer_new_primes


def centralizer_pi_delta(n2: int, q: int, s: PrimeSieve | None = None) -> PiSetDelta:
    """Both π-set differences for a Sylow q-subgroup, n < q <= 2n - 3.

    Both sides are computed as genuine set differences of the prime sets of
    the subgroup orders. The normalizer difference can be strictly smaller than
    the centralizer one: the new prime 2n - q is absorbed when it divides q - 1
    (e.g. 2n = 10, q = 7, where 3 already divides |N_{A_9}(Q)| = 42).
    """
    if n2 < 8 or n2 % 2:
        raise OutOfDomain(f"n2 must be even and >= 8, got {n2}")
    n = n2 // 2
    if not (_is_prime(q) and q % 2 and n < q <= n2 - 3):
        raise OutOfDomain(f"need an odd prime q with {n} < q <= {n2 - 3}, got {q}")
    cen = centralizer_primes(n2, q) - centralizer_primes(n2 - 1, q)
    nor = normalizer_primes(n2, q, s) - normalizer_primes(n2 - 1, q, s)
    return PiSetDelta(n2, q, cen, nor)


def dim_U(n: int) -> int:
    """Dimension of the biprimary space of A_n: its number of classes of order pq."""
    return biprimary_class_count(n)


def dim_U_tilde(n2: int) -> int:
    """A_{2n} classes of biprimary order whose cycle type has a fixed point.

    These are the classes of A_{2n} that meet A_{2n-1}. Split classes count
    with A_{2n}'s splitting, so this can differ from dim_U(2n - 1).
    """
    if n2 % 2:
        raise OutOfDomain(f"n2 must be even, got {n2}")
    return sum(ct.an_class_count for ct in biprimary_cycle_types(n2) if 1 in ct.parts)


def frobenius_part_mask(snapshot: permoracle.GroupSnapshot, q: int) -> np.ndarray:
    """Elements of N_{A_n}(Q) that fix every symbol outside Q's support {1..q}."""
    mask = permoracle.sylow_normalizer_mask(snapshot, q)
    outside = snapshot.elements[:, q:]
    return mask & np.all(outside == np.arange(q, snapshot.degree, dtype=outside.dtype), axis=1)


def frobenius_has_no_pq_element(n: int, q: int, allow_large: bool = False) -> bool:
    """Brute-force check that the Frobenius factor of N_{A_n}(Q) has no element of order pq."""
    ceiling = permoracle.HARD_MAX_DEGREE if allow_large else permoracle.DEFAULT_MAX_DEGREE
    if n > ceiling:
        raise ResourceLimitError(f"degree {n} exceeds the brute-force ceiling {ceiling}")
    _check_sylow_range(n, q, upto=n - 2)
    snap = permoracle.enumerate_group(n, allow_large)
    mask = frobenius_part_mask(snap, q)
    odd_primes = [p for p in range(3, n + 1, 2) if _is_prime(p) and p != q]
    return not any(permoracle.has_element_of_order(snap, p * q, mask) for p in odd_primes)
