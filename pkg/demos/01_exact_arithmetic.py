"""
Exact integer arithmetic: primes, congruences, Smith normal form
================================================================

A quick tour of the exact-arithmetic layer everything else builds on.
"""

from arithlab import (
    IntegerMatrix,
    crt_solve,
    factor,
    is_prime,
    next_prime_in_progression,
    smith_normal_form,
)

# Primality is deterministic across the whole range we care about.
print("is 561 prime?", is_prime(561), " (it is the classic pseudoprime 3*11*17)")
print("is 2^89 - 1 prime?", is_prime(2**89 - 1))

# Factorizations come back as (prime, exponent) pairs.
print("factor(2024) =", factor(2024).factors)

# Simultaneous congruences, with the lcm convention for overlapping moduli.
c, m = crt_solve([(2, 3), (3, 5), (1, 4)])
print(f"x = 2 (3), x = 3 (5), x = 1 (4)  ->  x = {c} (mod {m})")

# Prime hunting in residue classes: the workhorse for the experiments.
print("first prime 1 mod 20 beyond 100:", next_prime_in_progression(1, 20, 100))

# Smith normal form with full transform bookkeeping.
m = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
snf = smith_normal_form(m)
print("diagonal:", snf.diagonal)
check = snf.left_transform.mul(m).mul(snf.right_transform)
print("left * M * right is diagonal:", check.to_rows())
