"""
The explicit constant ladder
============================

Every bound in the toolkit is an exact integer or rational.  Some rungs
are comfortably small, some have six-figure digit counts, and some are
so large that only their size can be reported -- the ladder refuses to
materialize anything past the configurable digit cap instead of
guessing.
"""

import sys
from fractions import Fraction

from arithlab import (
    DigitCapExceeded,
    c_reductive,
    c_tilde,
    c_tilde_improved,
    dirichlet_index_bound,
    gamma,
    lam,
    psi,
    spl0_index_bound,
    t1_density_bound,
)

# Accurate digit counts below need the interpreter's decimal-rendering
# guard out of the way.
sys.set_int_max_str_digits(2_000_000)

# The base of the ladder: orders of general linear groups over the
# three-element field.
for d in (1, 2, 3, 4):
    print(f"gamma({d}) = {gamma(d)}")

# lam feeds gamma back into itself; psi then exponentiates.
print("lam(1), lam(2), lam(3) =", lam(1), lam(2), lam(3))
print("psi(1) =", psi(1))
print("psi(2) has", len(str(psi(2))), "digits")
print("psi(3) has", len(str(psi(3))), "digits")
try:
    psi(4)
except DigitCapExceeded as err:
    print("psi(4) refused:", err)

# The torus index bound is tiny in dimension 1 and hopeless beyond.
print("ctilde(1, n) for n = 1..5:", [c_tilde(1, n) for n in range(1, 6)])
try:
    c_tilde(2, 1)
except DigitCapExceeded as err:
    print("ctilde(2, 1) size report:", err.size.digits10, "digits (approx)")

# The sharpened variant keeps dimension 2 just within reach.
print("improved ctilde(2, 1) has", len(str(c_tilde_improved(2, 1))), "digits")

# Reductive-group and density-based index bounds.
print("c(1, 2, 1) =", c_reductive(1, 2, 1))
print("index bound, degree 2 at density 1/4:", dirichlet_index_bound(2, Fraction(1, 4)))
print("one-sided split bound at density 1/6:", spl0_index_bound(Fraction(1, 6)))
print("torus bound, dim 1 at density 1/2:", t1_density_bound(1, Fraction(1, 2)))
