"""
The worked experiments, end to end
==================================

Four executable constructions: biased prime pairs with all cross
symbols trivial, explicit witnesses inside open congruence sets, local
square evidence along split primes, the finite list of constrained
norm-one units, and the power-index products that certify an index
blow-up.
"""

from arithlab import (
    CongruenceTarget,
    artin_kernel_evidence,
    build_biased_prime_sets,
    density_witness,
    local_power_index,
    norm_one_constrained_units,
    section7_index_bound,
)

# Two growing prime lists, all cross Legendre symbols equal to 1.  The
# doubly-exponential growth is the price of the bias.
pair = build_biased_prime_sets(3)
print("P =", pair.p_list)
print("Q =", pair.q_list)

# A witness inside the open set {x = 3 (8)} x {x = 2 (7)} x units:
# a single signed prime does the job.
target = CongruenceTarget(((2, 3, 3), (7, 1, 2)))
eps, p = density_witness(target)
print(f"witness for the target: {eps:+d} * {p} = {eps * p}")
print("  check mod 8:", eps * p % 8, " check mod 7:", eps * p % 7)

# 5 is a square in every completion along its split primes; that is
# what makes the degree-5 progression kernel collapse.
report = artin_kernel_evidence(5, 10**3)
print(f"checked {len(report.checked_primes)} split primes for q = 5;",
      "failures:", list(report.failures))

# Constrained norm-one units of the Gaussian integers: the sweep keeps
# finding only the four obvious ones, at any height.
units = norm_one_constrained_units(50)
print("surviving norm-one elements at height 50:", [str(u) for u in units])

# Power indices at primes 1 mod 4n multiply up to n^ell, giving an
# index lower bound that diverges with ell.
print("index of cubes mod 13:", local_power_index(13, 3))
report = section7_index_bound(3, 5, [13, 37, 61, 73, 97])
print("local indices:", report.local_indices)
print("product:", report.product, " lower bound:", report.lower_bound)
