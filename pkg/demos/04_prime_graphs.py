"""
Prime graphs of A_n
===================

Vertices are the primes dividing n!/2, and p, q are joined when A_n has an
element of order pq. Going from A_{2n-1} to A_{2n} adds exactly one edge per
Goldbach decomposition of 2n.
"""

# %%
from goldbach_an.primegraph import build_by_criterion, build_by_spectrum, components, delta

g = build_by_criterion(20)
print(g.sorted_edges())
print("components:", [sorted(c) for c in components(g)])
print("same as spectrum build:", g == build_by_spectrum(20))

# %%
d = delta(build_by_criterion(30), build_by_criterion(29))
print("new edges at 30:", sorted(d.new_edges))

# %%
print(build_by_criterion(12).to_dot())
