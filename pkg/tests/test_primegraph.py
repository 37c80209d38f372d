import json

import pytest

from goldbach_an.errors import InternalConsistencyError, OutOfDomain
from goldbach_an.primegraph import (
    PrimeGraph,
    build_by_criterion,
    build_by_spectrum,
    components,
    delta,
    is_connected,
    vertex_set,
)
from goldbach_an.primes import build_sieve


@pytest.fixture(scope="module")
def big_sieve():
    return build_sieve(700)


def test_a8_by_criterion():
    g = build_by_criterion(8)
    assert g.vertices == (2, 3, 5, 7)
    assert g.edges == {(2, 3), (3, 5)}
    assert (3, 5) in g.edges


def test_builders_agree_at_8_and_small():
    assert build_by_spectrum(8) == build_by_criterion(8)
    for n in (5, 6, 7):
        assert build_by_spectrum(n) == build_by_criterion(n)


def test_spectrum_builder_examples():
    assert build_by_spectrum(5).edges == frozenset()
    assert (5, 7) in build_by_spectrum(12).edges


def test_criterion_domain():
    with pytest.raises(OutOfDomain):
        build_by_criterion(4)


def test_vertex_sets():
    assert vertex_set(2) == ()
    assert vertex_set(3) == (3,)
    assert vertex_set(4) == (2, 3)
    assert build_by_spectrum(3).vertices == (3,)


def test_delta_examples(big_sieve):
    d = delta(build_by_criterion(8), build_by_criterion(7))
    assert d.new_edges == {(3, 5)} and d.edge_diff_count == 1
    assert delta(build_by_criterion(9), build_by_criterion(8)).new_edges == {(2, 5)}
    d = delta(build_by_criterion(38, big_sieve), build_by_criterion(37, big_sieve))
    assert d.edge_diff_count == 1 and d.new_edges == {(7, 31)}


def test_delta_records_new_vertices():
    d = delta(build_by_criterion(11), build_by_criterion(10))
    assert d.new_vertices == {11}
    assert d.new_edges == {(2, 7)}
    assert d.is_proper


def test_delta_asserts_containment():
    g8 = build_by_criterion(8)
    bogus = PrimeGraph(7, (2, 3, 5, 7), frozenset({(5, 7)}))
    with pytest.raises(InternalConsistencyError):
        delta(g8, bogus)


def test_components_examples(big_sieve):
    assert components(build_by_criterion(8)) == [{2, 3, 5}, {7}]
    assert components(build_by_spectrum(5)) == [{2}, {3}, {5}]
    assert components(build_by_criterion(20, big_sieve)) == [{2, 3, 5, 7, 11, 13, 17}, {19}]


def _union_find_components(g):
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for p, q in g.edges:
        parent[find(p)] = find(q)
    groups = {}
    for v in g.vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted(map(frozenset, groups.values()), key=min)


def test_components_bounded_and_independent(big_sieve):
    for n in range(5, 301):
        g = build_by_criterion(n, big_sieve)
        comps = components(g)
        assert len(comps) <= 3
        assert comps == _union_find_components(g)


def test_builder_equivalence_to_40(big_sieve):
    for n in range(8, 41):
        assert build_by_criterion(n, big_sieve) == build_by_spectrum(n)


def test_monotone(big_sieve):
    graphs = [build_by_criterion(n, big_sieve) for n in range(5, 120)]
    for a, b in zip(graphs, graphs[1:]):
        assert a.is_subgraph_of(b)
    assert graphs[0].is_subgraph_of(graphs[-1])


def test_two_edges_same_in_odd_and_even_degree(big_sieve):
    for n2 in range(8, 601, 2):
        even = build_by_criterion(n2, big_sieve)
        odd = build_by_criterion(n2 - 1, big_sieve)
        assert {e for e in even.edges if e[0] == 2} == {e for e in odd.edges if e[0] == 2}
        assert even.vertices == odd.vertices


def test_serialization():
    g = build_by_criterion(8)
    assert json.loads(g.to_json()) == {"degree": 8, "vertices": [2, 3, 5, 7],
                                       "edges": [[2, 3], [3, 5]]}
    dot = g.to_dot()
    assert dot.startswith("graph A8 {") and dot.count("--") == 2
    assert "2 -- 3;" in dot and "3 -- 5;" in dot
    assert g.to_dot() == build_by_spectrum(8).to_dot()


def test_is_connected():
    assert not is_connected(build_by_criterion(8))
    # 23 + 3 > 24 isolates 23; at 26 it joins 3
    assert not is_connected(build_by_criterion(24))
    assert is_connected(build_by_criterion(26))
