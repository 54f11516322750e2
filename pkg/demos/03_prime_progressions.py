"""
Prime progressions, splitting, and densities
============================================

Abelian extensions of the rationals are encoded by a conductor and a
residue subgroup; progressions of primes, Frobenius classes, and exact
densities all become residue arithmetic, and a sieve confirms the exact
values empirically.
"""

from arithlab import (
    AbelianExtensionDescriptor,
    ProgressionSpec,
    chebotarev_density,
    frobenius,
    intersection_density,
    natural_density_estimate,
    splits_completely,
    tractable_condition,
)

# The conductor-4 field (generated by a square root of -1).
gaussian = AbelianExtensionDescriptor.gaussian()
print("degree of the conductor-4 field:", gaussian.degree)

# Frobenius data distinguishes split from inert primes.
for p in (5, 13, 3, 7):
    print(f"Frobenius class of {p}:", sorted(frobenius(gaussian, p).coset),
          " splits:", splits_completely(gaussian, p))

# Exact densities and their sieve estimates.
for a, m in [(1, 4), (3, 4), (1, 5), (1, 8)]:
    spec = ProgressionSpec.residue_class(a, m)
    exact = chebotarev_density(spec)
    estimate = natural_density_estimate(spec, 10**6)
    print(f"primes {a} mod {m}: exact {exact}, sieve to 10^6 gives {estimate:.4f}")

# Intersections with split sets are residue counts modulo the lcm.
p14 = ProgressionSpec.residue_class(1, 4)
p34 = ProgressionSpec.residue_class(3, 4)
zeta5 = AbelianExtensionDescriptor.cyclotomic(5)
print("density of {p = 1 (4)} splitting in the conductor-5 field:",
      intersection_density(p14, zeta5))
print("density of {p = 3 (4)} splitting in the conductor-4 field:",
      intersection_density(p34, gaussian))

# The restriction condition that separates the good progressions from
# the bad ones: 3 mod 4 moves the conductor-4 field, 1 mod 4 fixes it.
print("condition for 1 mod 4:", tractable_condition(p14, gaussian))
print("condition for 3 mod 4:", tractable_condition(p34, gaussian))
