import math

import pytest

from goldbach_an.errors import OutOfDomain, ResourceLimitError
from goldbach_an.permoracle import (
    Permutation,
    centralizer_order,
    enumerate_group,
    sylow_normalizer_mask,
)
from goldbach_an.primes import build_sieve
from goldbach_an.structure import (
    centralizer_pi_delta,
    dim_U,
    dim_U_tilde,
    frobenius_has_no_pq_element,
    frobenius_part_mask,
    normalizer_primes,
    pi_of_alternating,
    subgroup_profile,
    sylow_centralizer_order,
    sylow_normalizer_order,
)

from conftest import trial_division_is_prime
from test_partitions import oracle_biprimary_classes


def primes_of(m):
    return {p for p in range(2, m + 1) if m % p == 0 and trial_division_is_prime(p)}


def test_pi_of_alternating():
    assert pi_of_alternating(3) == {3}
    assert pi_of_alternating(4) == {2, 3}
    assert pi_of_alternating(2) == set()
    for m in range(0, 12):
        assert pi_of_alternating(m) == primes_of(max(math.factorial(m) // 2, 1))


def test_profile_examples():
    p = subgroup_profile(8, 5)
    assert (p.centralizer_order, p.normalizer_order) == (15, 60)
    p = subgroup_profile(10, 7)
    assert p.centralizer_primes == {3, 7}
    assert p.normalizer_primes == {2, 3, 7}
    assert p.normalizer_order == 126
    assert subgroup_profile(9, 5).centralizer_order == 60
    assert subgroup_profile(9, 5).frobenius_part == (5, 4)


@pytest.mark.parametrize("n, q", [(8, 3), (8, 7), (9, 11), (10, 9), (7, 5)])
def test_profile_domain(n, q):
    with pytest.raises(OutOfDomain):
        subgroup_profile(n, q)


def primes_dividing(m, bound):
    return {p for p in range(2, bound + 1) if trial_division_is_prime(p) and m % p == 0}


def test_profile_prime_sets_follow_orders():
    s = build_sieve(200)
    for n in range(8, 60):
        for q in [q for q in range(n // 2 + 1, n - 1) if trial_division_is_prime(q) and q > 2]:
            p = subgroup_profile(n, q, s)
            assert p.normalizer_order == (q - 1) * p.centralizer_order
            # every prime factor of these orders is at most n
            assert p.centralizer_primes == primes_dividing(p.centralizer_order, n)
            assert p.normalizer_primes == primes_dividing(p.normalizer_order, n)


@pytest.mark.parametrize("n", range(5, 10))
def test_formulas_against_brute_force_all_q(n):
    snap = enumerate_group(n)
    for q in [q for q in range(3, n + 1) if trial_division_is_prime(q) and 2 * q > n]:
        x = Permutation.from_cycles(n, range(1, q + 1))
        assert centralizer_order(snap, x) == sylow_centralizer_order(n, q)
        assert sylow_normalizer_mask(snap, q).sum() == sylow_normalizer_order(n, q)
        if n >= 8 and q <= n - 2:
            p = subgroup_profile(n, q)
            assert (p.centralizer_order, p.normalizer_order) == (
                centralizer_order(snap, x), sylow_normalizer_mask(snap, q).sum())


def test_pi_delta_examples():
    assert centralizer_pi_delta(8, 5).centralizer_new_primes == {3}
    assert centralizer_pi_delta(12, 7).centralizer_new_primes == {5}
    with pytest.raises(OutOfDomain):
        centralizer_pi_delta(8, 7)  # 7 > 2n - 3


def test_pi_delta_empty_when_no_partner():
    # 2n = 8, q = 7 sits past 2n - 3; its would-be gain pi(A_1) - pi(A_0) is empty
    assert pi_of_alternating(1) - pi_of_alternating(0) == set()
    # 14 = 3 + 11 is the only pair with q in (7, 11]
    assert centralizer_pi_delta(14, 11).centralizer_new_primes == {3}


def _deltas(limit):
    s = build_sieve(limit)
    for n2 in range(8, limit + 1, 2):
        for q in s.primes_in(n2 // 2 + 1, n2 - 3):
            yield n2, q, centralizer_pi_delta(n2, q, s)


def test_centralizer_delta_nonempty_iff_partner_prime():
    for n2, q, d in _deltas(400):
        m = n2 - q
        assert bool(d.centralizer_new_primes) == (trial_division_is_prime(m) and m >= 3)
        if d.centralizer_new_primes:
            assert d.centralizer_new_primes == {m}


def test_normalizer_delta_disagreements_are_exactly_divisibility_cases():
    bad = [(n2, q) for n2, q, d in _deltas(400) if not d.agree]
    expected = [(n2, q) for n2, q, d in _deltas(400)
                if d.centralizer_new_primes and (q - 1) % (n2 - q) == 0]
    assert bad == expected
    assert bad[:3] == [(10, 7), (16, 11), (16, 13)]


@pytest.mark.xfail(strict=True, reason="the normalizer π-set gain is smaller than the "
                   "centralizer one when 2n - q divides q - 1 (first at 2n = 10, q = 7)")
def test_normalizer_delta_equals_centralizer_delta():
    for _, _, d in _deltas(400):
        assert len(d.centralizer_new_primes) == len(d.normalizer_new_primes)


def test_normalizer_primes_at_10_against_brute_force():
    # N_{A_9}(Q_7) has order 42; its primes already contain 3
    snap = enumerate_group(9)
    assert primes_of(int(sylow_normalizer_mask(snap, 7).sum())) == normalizer_primes(9, 7)
    assert normalizer_primes(10, 7) == normalizer_primes(9, 7) == {2, 3, 7}


@pytest.mark.parametrize("n, expected", [(7, 0), (8, 2), (9, 2)])
def test_dim_U_examples(n, expected):
    assert dim_U(n) == expected


def test_dim_U_tilde_examples():
    assert dim_U_tilde(8) == 0
    assert dim_U_tilde(10) == 1
    # {1,1,1,1,3,5}, {1,3,3,5}, {1,1,3,7}
    assert dim_U_tilde(12) == oracle_biprimary_classes(12, need_fixed_point=True) == 3


def test_dim_U_tilde_against_oracle():
    for n2 in range(8, 41, 2):
        assert dim_U_tilde(n2) == oracle_biprimary_classes(n2, need_fixed_point=True)


def test_dim_U_monotone_in_odd_to_even_step():
    for n2 in range(8, 101, 2):
        assert dim_U(n2 - 1) <= dim_U(n2)


def test_dim_U_tilde_can_differ_from_odd_dimension():
    # {1,3,5} splits in A_9, {1,1,3,5} does not split in A_10
    assert dim_U(9) == 2 and dim_U_tilde(10) == 1


def test_dim_U_against_brute_force_a9():
    snap = enumerate_group(9)
    ids = {int(c) for c, o in zip(snap.class_ids, snap.orders)
           if len(primes_of(int(o))) == 2 and o % 2 and math.prod(primes_of(int(o))) == o}
    assert len(ids) == dim_U(9)


@pytest.mark.parametrize("n, q", [(8, 5), (9, 5), (9, 7), (7, 5), (5, 3)])
def test_frobenius_part(n, q):
    assert frobenius_has_no_pq_element(n, q)
    snap = enumerate_group(n)
    mask = frobenius_part_mask(snap, q)
    # the even part of AGL(1, q) acting on {1..q}
    assert mask.sum() == q * (q - 1) // 2
    assert set(snap.orders[mask].tolist()) <= {1, q} | {d for d in range(2, q) if (q - 1) % d == 0}


def test_whole_normalizer_can_have_pq_elements():
    snap = enumerate_group(9)
    assert 15 in set(snap.orders[sylow_normalizer_mask(snap, 5)].tolist())


def test_frobenius_limits():
    with pytest.raises(ResourceLimitError):
        frobenius_has_no_pq_element(11, 7)
    with pytest.raises(OutOfDomain):
        frobenius_has_no_pq_element(8, 7)
