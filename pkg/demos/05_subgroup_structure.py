"""
Sylow subgroups and the primes they see
=======================================

For n < q <= 2n - 3 a q-cycle's centralizer in A_{2n} picks up the prime 2n - q
compared with A_{2n-1}. The normalizer gains it too, except when 2n - q already
divides q - 1.
"""

# %%
from goldbach_an.structure import centralizer_pi_delta, dim_U, subgroup_profile

print(subgroup_profile(12, 7))

# %%
for n2, q in [(12, 7), (10, 7), (16, 11), (16, 13)]:
    d = centralizer_pi_delta(n2, q)
    print(n2, q, sorted(d.centralizer_new_primes), sorted(d.normalizer_new_primes), d.agree)

# %%
print("biprimary class counts:", {n: dim_U(n) for n in range(8, 21)})
