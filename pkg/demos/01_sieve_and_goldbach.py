"""
Primes, prime counts and Goldbach decompositions
================================================

A numpy sieve backs everything else in the package. Here we build one, count
primes, and list the ways an even number splits into two distinct odd primes.
"""

# %%
from goldbach_an.primes import build_sieve, goldbach_pairs, prime_count, rosser_scan

s = build_sieve(10**6)
print("primes up to 10^6:", prime_count(s, 10**6))
print("first ten:", s.primes[:10])

# %%
# Decompositions use distinct odd primes, so 6 = 3 + 3 does not count and 8 is
# the first even number with a decomposition.
for target in (8, 10, 16, 60, 100):
    print(target, goldbach_pairs(s, target).sorted_pairs())

# %%
# The short-interval bound used later: every (6x/7, x] with x >= 37 holds a prime.
print("failures on [37, 10^6]:", rosser_scan(s, 37, 10**6).tolist())
