"""Brute-force engine for A_n, n <= 10.

Every element is materialized as a row of a numpy image array, so orders,
centralizers and normalizers are computed by direct comparison over the whole
group. This is the ground truth the closed-form results are checked against.
Symbols are 1..n in the public API and 0..n-1 inside the arrays.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InvalidArgument, ResourceLimitError

__all__ = [
    "Permutation",
    "GroupSnapshot",
    "enumerate_group",
    "centralizer_order",
    "centralizer_mask",
    "sylow_normalizer_order",
    "sylow_normalizer_mask",
    "has_element_of_order",
    "DEFAULT_MAX_DEGREE",
    "HARD_MAX_DEGREE",
]

DEFAULT_MAX_DEGREE = 9
HARD_MAX_DEGREE = 10


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidArgument(f"not a permutation of 1..n: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in map(list, cycles):
            if seen.intersection(cyc) or not all(1 <= c <= n for c in cyc):
                raise InvalidArgument(f"bad cycle {cyc} for degree {n}")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    def cycle_lengths(self) -> list[int]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = self.images[i] - 1
                length += 1
            out.append(length)
        return sorted(out, reverse=True)

    @property
    def is_even(self) -> bool:
        return (self.degree - len(self.cycle_lengths())) % 2 == 0

    @property
    def order(self) -> int:
        return math.lcm(*self.cycle_lengths())

    def as_array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int8) - 1


@dataclass(frozen=True)
class GroupSnapshot:
    """All of A_n, in lexicographic order of image arrays."""

    degree: int
    elements: np.ndarray = field(repr=False)   # (N, n) int8, 0-based images
    codes: np.ndarray = field(repr=False)      # (N,) int64, sorted
    orders: np.ndarray = field(repr=False)     # (N,) element orders
    class_ids: np.ndarray = field(repr=False)  # (N,) conjugacy class ids
    class_types: tuple[tuple[int, ...], ...] = field(repr=False)  # cycle type per class id

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order_map(self) -> dict[int, int]:
        return dict(zip(self.codes.tolist(), self.orders.tolist()))

    @property
    def class_map(self) -> dict[int, int]:
        return dict(zip(self.codes.tolist(), self.class_ids.tolist()))

    @property
    def class_count(self) -> int:
        return len(self.class_types)

    def encode(self, arr: np.ndarray) -> np.ndarray:
        weights = self.degree ** np.arange(self.degree - 1, -1, -1, dtype=np.int64)
        return np.asarray(arr, dtype=np.int64) @ weights

    def index_of(self, x: Permutation | np.ndarray) -> int:
        arr = x.as_array() if isinstance(x, Permutation) else np.asarray(x)
        if arr.shape != (self.degree,):
            raise InvalidArgument(f"degree mismatch: expected {self.degree}")
        code = self.encode(arr)
        i = int(np.searchsorted(self.codes, code))
        if i == len(self.codes) or self.codes[i] != code:
            raise InvalidArgument("permutation is not in the alternating group")
        return i

    def indices_of(self, arrs: np.ndarray) -> np.ndarray:
        codes = self.encode(arrs)
        idx = np.searchsorted(self.codes, codes)
        idx = np.minimum(idx, len(self.codes) - 1)
        if not np.array_equal(self.codes[idx], codes):
            raise InvalidArgument("some permutations are not in the group")
        return idx

    def element(self, i: int) -> Permutation:
        return Permutation(tuple(int(v) + 1 for v in self.elements[i]))

    def conjugates(self, x: np.ndarray) -> np.ndarray:
        """Rows ``g x g^-1`` for every g in the group."""
        g = self.elements
        out = np.empty_like(g)
        # (g x g^-1)(g(i)) = g(x(i))
        np.put_along_axis(out, g.astype(np.intp), g[:, x], axis=1)
        return out


def _even_permutations(n: int) -> np.ndarray:
    total = math.factorial(n)
    flat = np.fromiter(itertools.chain.from_iterable(itertools.permutations(range(n))),
                       dtype=np.int8, count=total * n)
    perms = flat.reshape(total, n)
    inversions = np.zeros(total, dtype=np.int32)
    for i in range(n):
        for j in range(i + 1, n):
            inversions += perms[:, i] > perms[:, j]
    return np.ascontiguousarray(perms[inversions % 2 == 0])


def _return_times(g: np.ndarray) -> np.ndarray:
    # first k >= 1 with x^k(i) = i, i.e. the length of the cycle through i
    n = g.shape[1]
    ident = np.arange(n, dtype=g.dtype)
    ret = np.zeros(g.shape, dtype=np.int16)
    cur = g.copy()
    gi = g.astype(np.intp)
    for k in range(1, n + 1):
        ret[(cur == ident) & (ret == 0)] = k
        cur = np.take_along_axis(cur, gi, axis=1)
    return ret


def _check_degree(n: int, allow_large: bool) -> None:
    if n < 2:
        raise InvalidArgument(f"degree must be >= 2, got {n}")
    ceiling = HARD_MAX_DEGREE if allow_large else DEFAULT_MAX_DEGREE
    if n > ceiling:
        raise ResourceLimitError(
            f"degree {n} exceeds the brute-force ceiling {ceiling}"
            + ("" if allow_large else " (pass allow_large=True for n = 10)"))


@lru_cache(maxsize=4)
def enumerate_group(n: int, allow_large: bool = False) -> GroupSnapshot:
    """Materialize A_n with element orders and conjugacy classes.

    Classes come from explicit orbits: a representative is conjugated by every
    group element and its orbit becomes one class, repeated until every element
    of a cycle type is covered. Nothing here relies on the splitting rule.
    """
    _check_degree(n, allow_large)
    elems = _even_permutations(n)
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = elems.astype(np.int64) @ weights

    ret = _return_times(elems)
    orders = np.lcm.reduce(ret.astype(np.int64), axis=1)
    # row signature: number of cycles of each length 1..n
    sig = np.stack([(ret == L).sum(axis=1) // L for L in range(1, n + 1)], axis=1)
    _, type_of = np.unique(sig, axis=0, return_inverse=True)
    type_of = type_of.ravel()

    snap = GroupSnapshot(n, elems, codes, orders, np.full(len(elems), -1, dtype=np.int32), ())
    class_ids = snap.class_ids
    class_types = []
    for t in range(type_of.max() + 1):
        members = np.flatnonzero(type_of == t)
        while True:
            todo = members[class_ids[members] < 0]
            if not len(todo):
                break
            rep = todo[0]
            orbit = np.unique(snap.indices_of(snap.conjugates(elems[rep])))
            class_ids[orbit] = len(class_types)
            counts = sig[rep]
            class_types.append(tuple(sorted(
                (L for L in range(1, n + 1) for _ in range(counts[L - 1])), reverse=True)))

    for arr in (elems, codes, orders, class_ids):
        arr.setflags(write=False)
    return GroupSnapshot(n, elems, codes, orders, class_ids, tuple(class_types))


def _as_array(snapshot: GroupSnapshot, x: Permutation | int) -> np.ndarray:
    if isinstance(x, (int, np.integer)):
        return snapshot.elements[x]
    snapshot.index_of(x)  # raises if x is not in the group
    return x.as_array()


def centralizer_mask(snapshot: GroupSnapshot, x: Permutation | int) -> np.ndarray:
    xa = _as_array(snapshot, x).astype(np.intp)
    g = snapshot.elements
    return np.all(g[:, xa] == xa[g.astype(np.intp)], axis=1)


def centralizer_order(snapshot: GroupSnapshot, x: Permutation | int) -> int:
    """|C_{A_n}(x)| by testing ``gx == xg`` for every g."""
    return int(centralizer_mask(snapshot, x).sum())


def _standard_cycle(n: int, q: int) -> Permutation:
    return Permutation.from_cycles(n, tuple(range(1, q + 1)))


def sylow_normalizer_mask(snapshot: GroupSnapshot, q: int) -> np.ndarray:
    """Elements g with g Q g^-1 = Q, where Q = <(1 2 ... q)>."""
    n = snapshot.degree
    if not (2 * q > n and q <= n and q % 2 and all(q % d for d in range(3, q, 2))):
        raise InvalidArgument(f"need an odd prime q with n/2 < q <= n; got q={q}, n={n}")
    x = _standard_cycle(n, q).as_array()
    powers = [x]
    for _ in range(q - 2):
        powers.append(powers[-1][x])
    power_codes = snapshot.encode(np.array(powers))
    # Q has prime order, so g normalizes Q iff it sends x to a generator of Q
    return np.isin(snapshot.encode(snapshot.conjugates(x)), power_codes)


def sylow_normalizer_order(snapshot: GroupSnapshot, q: int) -> int:
    return int(sylow_normalizer_mask(snapshot, q).sum())


def has_element_of_order(snapshot: GroupSnapshot, m: int,
                         within: np.ndarray | None = None) -> bool:
    """True iff some element (of ``within``, a mask or index array) has order m."""
    orders = snapshot.orders if within is None else snapshot.orders[within]
    return bool(np.any(orders == m))
