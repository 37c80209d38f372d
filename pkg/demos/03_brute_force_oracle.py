"""
A brute-force view of small alternating groups
==============================================

For n <= 9 the whole group fits in memory as an integer array. Centralizers,
Sylow normalizers and conjugacy classes can then be read off directly.
"""

# %%
from goldbach_an.permoracle import (
    Permutation,
    centralizer_order,
    enumerate_group,
    sylow_normalizer_order,
)

snap = enumerate_group(9)
print("|A_9| =", len(snap.codes), "classes:", snap.class_count)

# %%
seven = Permutation.from_cycles(9, (1, 2, 3, 4, 5, 6, 7))
print("centralizer of a 7-cycle in A_9:", centralizer_order(snap, seven))
print("normalizer of its subgroup:", sylow_normalizer_order(snap, 7))

# %%
# With no room left for an odd correction the normalizer halves: 21, not 42.
print("A_7, q = 7:", sylow_normalizer_order(enumerate_group(7), 7))
