"""
Seven views of one Goldbach decomposition
=========================================

``verify_theorem_a`` evaluates each characterization at one even number and
reports where they disagree. A sweep shows the disagreements are rare.
"""

# %%
from goldbach_an.primes import build_sieve
from goldbach_an.theorems import table_1, table_csv, theorem_a_sweep, verify_theorem_a

s = build_sieve(1000)
print(verify_theorem_a(12, s).to_json())

# %%
print(table_csv(table_1(4, 30, s)))

# %%
bad = [r.n2 for r in theorem_a_sweep(8, 1000, s, with_part7=False) if not r.all_equivalent]
print("disagreements up to 1000:", bad)
print(verify_theorem_a(10, s).disagreeing_parts)
