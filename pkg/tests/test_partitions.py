import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from goldbach_an.errors import InvalidArgument, ResourceLimitError
from goldbach_an.partitions import (
    CycleType,
    MAX_DEGREE,
    alternating_class_count,
    biprimary_class_count,
    enumerate_cycle_types,
    partition_number,
    restricted_partition_count,
    spectrum,
)
from goldbach_an.permoracle import enumerate_group

from conftest import trial_division_is_prime


def accel_asc(n):
    """Kelleher's ascending composition generator, independent of the package."""
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[:k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[:k + 1]


def is_biprimary(m):
    fs = [p for p in range(3, m + 1, 2) if m % p == 0 and trial_division_is_prime(p)]
    return m % 2 == 1 and len(fs) == 2 and fs[0] * fs[1] == m


def oracle_biprimary_classes(n, need_fixed_point=False):
    total = 0
    for parts in accel_asc(n):
        if need_fixed_point and 1 not in parts:
            continue
        if (n - len(parts)) % 2 or not is_biprimary(math.lcm(*parts)):
            continue
        total += 2 if len(set(parts)) == len(parts) and all(p % 2 for p in parts) else 1
    return total


def test_partition_count_small():
    assert sum(1 for _ in enumerate_cycle_types(5)) == 7


def test_cycle_type_examples():
    ct = CycleType.from_parts([3, 2, 2])
    assert (ct.n, ct.order, ct.is_even) == (7, 6, True)
    ct = CycleType.from_parts([1, 3, 5])
    assert (ct.order, ct.is_even, ct.splits_in_An) == (15, True, True)


def test_cycle_type_rejects_bad_parts():
    with pytest.raises(InvalidArgument):
        CycleType.from_parts([0, 3])


def test_degree_bound():
    with pytest.raises(ResourceLimitError):
        next(enumerate_cycle_types(MAX_DEGREE + 1))
    with pytest.raises(InvalidArgument):
        next(enumerate_cycle_types(3, "sideways"))


@pytest.mark.parametrize("n", range(1, 51))
def test_enumeration_count_matches_pentagonal(n):
    seen = [ct.parts for ct in enumerate_cycle_types(n)]
    assert len(seen) == len(set(seen)) == partition_number(n)


@pytest.mark.slow
def test_enumeration_count_n60():
    assert sum(1 for _ in enumerate_cycle_types(60)) == partition_number(60) == 966467


def test_pentagonal_matches_knapsack_to_bound():
    for n in range(MAX_DEGREE + 1):
        assert partition_number(n) == restricted_partition_count(n, range(1, n + 1))
    assert partition_number(80) == 15796476


def test_enumeration_matches_independent_generator():
    for n in range(1, 26):
        ours = Counter(ct.parts for ct in enumerate_cycle_types(n))
        theirs = Counter(tuple(sorted(p, reverse=True)) for p in accel_asc(n))
        assert ours == theirs


def test_parity_filter_splits_partitions():
    for n in range(1, 20):
        even = {ct.parts for ct in enumerate_cycle_types(n, "even")}
        odd = {ct.parts for ct in enumerate_cycle_types(n, "odd")}
        assert not even & odd
        assert len(even) + len(odd) == partition_number(n)


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=10))
def test_cycle_type_invariants(parts):
    ct = CycleType.from_parts(parts)
    assert sum(ct.parts) == ct.n
    assert ct.order == math.lcm(*parts)
    assert ct.is_even == (sum(1 for m in parts if m % 2 == 0) % 2 == 0)
    if ct.splits_in_An:
        assert ct.is_even


def test_spectrum_examples():
    assert spectrum(5, "alternating").orders == (1, 2, 3, 5)
    assert spectrum(4, "A").orders == (1, 2, 3)
    s8 = spectrum(8, "alternating")
    assert 15 in s8.orders and 14 not in s8.orders
    assert spectrum(1).orders == (1,)


@pytest.mark.parametrize("n", range(2, 10))
def test_spectrum_matches_brute_force(n):
    snap = enumerate_group(n)
    assert set(spectrum(n).orders) == set(snap.orders.tolist())


@pytest.mark.parametrize("group", ["alternating", "symmetric"])
def test_spectrum_methods_agree(group):
    for n in range(1, 31):
        assert spectrum(n, group).orders == spectrum(n, group, method="enumerate").orders


def test_symmetric_spectrum_contains_alternating():
    for n in range(1, 40):
        assert set(spectrum(n, "A").orders) <= set(spectrum(n, "S").orders)
    assert spectrum(4, "S").orders == (1, 2, 3, 4)


def test_spectrum_rejects_unknown_group():
    with pytest.raises(InvalidArgument):
        spectrum(5, "cyclic")


def test_edge_rule_against_spectrum():
    odd_primes = [p for p in range(3, 61) if trial_division_is_prime(p)]
    for n in range(8, 61):
        orders = set(spectrum(n).orders)
        for i, p in enumerate(odd_primes):
            if p > n:
                break
            assert (2 * p in orders) == (p + 4 <= n)
            for q in odd_primes[i + 1:]:
                if q > n:
                    break
                assert (p * q in orders) == (p + q <= n)


@pytest.mark.parametrize("n, expected", [(7, 0), (8, 2), (10, 3), (9, 2)])
def test_biprimary_class_count_examples(n, expected):
    assert biprimary_class_count(n) == expected


def test_biprimary_count_against_full_enumeration():
    for n in range(1, 41):
        assert biprimary_class_count(n) == oracle_biprimary_classes(n)


@pytest.mark.parametrize("n", [8, 9])
def test_biprimary_count_against_brute_force(n):
    snap = enumerate_group(n)
    ids = {int(c) for c, o in zip(snap.class_ids, snap.orders) if is_biprimary(int(o))}
    assert len(ids) == biprimary_class_count(n)


def test_alternating_class_counts():
    # classes of A_n for n = 2..10 (A_10 from the literature: 24)
    assert [alternating_class_count(n) for n in range(2, 11)] == [1, 3, 4, 5, 7, 9, 14, 18, 24]
