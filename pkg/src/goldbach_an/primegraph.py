"""Element-order prime graphs of alternating groups.

Two builders produce the same graph by different routes: ``build_by_criterion``
uses the arithmetic edge rule (odd p, q adjacent iff p + q <= n; 2 and p
adjacent iff p + 4 <= n), ``build_by_spectrum`` reads edges off the full set of
element orders. Their agreement is one of the package's cross-checks.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import InternalConsistencyError, InvalidArgument, OutOfDomain, OutOfRange
from .partitions import spectrum
from .primes import PrimeSieve, build_sieve

__all__ = [
    "PrimeGraph",
    "GraphDelta",
    "vertex_set",
    "build_by_criterion",
    "build_by_spectrum",
    "delta",
    "components",
    "is_connected",
]

Edge = tuple[int, int]


@dataclass(frozen=True)
class PrimeGraph:
    degree: int
    vertices: tuple[int, ...]
    edges: frozenset[Edge]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def same_graph(self, other: PrimeGraph) -> bool:
        """Equal vertex and edge sets, whatever the degree label."""
        return self.vertices == other.vertices and self.edges == other.edges

    def is_subgraph_of(self, other: PrimeGraph) -> bool:
        return set(self.vertices) <= set(other.vertices) and self.edges <= other.edges

    def is_proper_subgraph_of(self, other: PrimeGraph) -> bool:
        return self.is_subgraph_of(other) and (
            len(self.vertices) < len(other.vertices) or len(self.edges) < len(other.edges))

    def neighbors(self, p: int) -> set[int]:
        return {b if a == p else a for a, b in self.edges if p in (a, b)}

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.sorted_edges())
        return g

    def to_json(self) -> str:
        return json.dumps({"degree": self.degree, "vertices": list(self.vertices),
                           "edges": [list(e) for e in self.sorted_edges()]},
                          separators=(",", ":"))

    def to_dot(self) -> str:
        lines = [f"graph A{self.degree} {{"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {p} -- {q};" for p, q in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphDelta:
    larger_degree: int
    smaller_degree: int
    new_vertices: frozenset[int]
    new_edges: frozenset[Edge]

    @property
    def edge_diff_count(self) -> int:
        return len(self.new_edges)

    @property
    def is_proper(self) -> bool:
        """Whether the smaller graph is a proper subgraph of the larger."""
        return bool(self.new_vertices or self.new_edges)


def vertex_set(n: int, s: PrimeSieve | None = None) -> tuple[int, ...]:
    """Primes dividing n!/2: nothing for n <= 2, {3} for n = 3, all primes <= n after."""
    if n <= 2:
        return ()
    if n == 3:
        return (3,)
    s = s if s is not None and s.limit >= n else build_sieve(n)
    return tuple(s.primes_in(2, n))


def build_by_criterion(n: int, s: PrimeSieve | None = None) -> PrimeGraph:
    if n < 5:
        raise OutOfDomain(f"criterion builder needs n >= 5, got {n}")
    if s is None:
        s = build_sieve(n)
    elif s.limit < n:
        raise OutOfRange(f"sieve limit {s.limit} < degree {n}")
    verts = vertex_set(n, s)
    odd = verts[1:]
    edges = {(2, p) for p in odd if p + 4 <= n}
    for i, p in enumerate(odd):
        for q in odd[i + 1:]:
            if p + q > n:
                break
            edges.add((p, q))
    return PrimeGraph(n, verts, frozenset(edges))


def build_by_spectrum(n: int) -> PrimeGraph:
    if n < 1:
        raise InvalidArgument(f"degree must be >= 1, got {n}")
    orders = set(spectrum(n, "alternating").orders)
    verts = vertex_set(n)
    edges = frozenset((p, q) for p, q in combinations(verts, 2) if p * q in orders)
    return PrimeGraph(n, verts, edges)


def delta(larger: PrimeGraph, smaller: PrimeGraph) -> GraphDelta:
    """What ``larger`` adds over ``smaller``; containment is required."""
    if smaller.degree >= larger.degree:
        raise InvalidArgument("smaller.degree must be below larger.degree")
    if not smaller.is_subgraph_of(larger):
        raise InternalConsistencyError(
            f"prime graph of A_{smaller.degree} is not contained in that of A_{larger.degree}")
    return GraphDelta(larger.degree, smaller.degree,
                      frozenset(larger.vertices) - frozenset(smaller.vertices),
                      larger.edges - smaller.edges)


def components(g: PrimeGraph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest vertex."""
    comps = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(comps, key=min)


def is_connected(g: PrimeGraph) -> bool:
    return len(components(g)) <= 1
