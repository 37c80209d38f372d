"""
Element orders from cycle types
===============================

The order of a permutation is the lcm of its cycle lengths, and its parity is
fixed by n minus the number of cycles. Element orders of A_n and S_n follow.
"""

# %%
from goldbach_an.partitions import (
    CycleType,
    alternating_class_count,
    enumerate_cycle_types,
    partition_number,
    spectrum,
)

ct = CycleType.from_parts((5, 3, 1))
print(ct.parts, "order", ct.order, "even", ct.is_even, "splits", ct.splits_in_An)

# %%
for n in range(4, 11):
    print(f"A_{n}:", spectrum(n, "A").orders)

# %%
# Element orders of S_n that are missing from A_n: they need an odd permutation.
print(sorted(set(spectrum(10, "S").orders) - set(spectrum(10, "A").orders)))

# %%
print("p(30) =", partition_number(30), "=", sum(1 for _ in enumerate_cycle_types(30)))
print("classes of A_n, n = 1..9:", [alternating_class_count(n) for n in range(1, 10)])
