"""Auditing the 1/2 lower bound on the mod-2 coset norm.

For any q with q(1) = 1 the even and odd signed sums of q^L add up to 1,
so one of them is at least 1/2 in modulus.  This script checks that on a
seeded random corpus, and shows that the mod-2^L operator norm has no
such floor.
"""
import random
from fractions import Fraction

from subconv import corpus
from subconv.analyzer import lower_bound_audit
from subconv.laurent import ONE_PLUS_Z
from subconv.scheme import binary_coset_norm, operator_norm

rng = random.Random(2024)
failures = 0
smallest = None
for _ in range(300):
    q = corpus.random_unit_sum_symbol(rng)
    for row in lower_bound_audit(q, 4):
        failures += not row.passed
        if smallest is None or row.binary_coset_norm < smallest:
            smallest = row.binary_coset_norm
print("audit failures:", failures)
print("smallest mod-2 coset norm seen:", smallest)

# The linear spline shows the two quantities parting ways.
q = ONE_PLUS_Z / 2
for L in range(1, 5):
    print(f"L={L}: mod-2 coset norm {binary_coset_norm(q, L)}, operator norm {operator_norm(q, L)}")
