"""
Quadratic symbols and the Hilbert product formula
=================================================

Legendre and Jacobi symbols drive everything congruence-flavored; the
local Hilbert symbols tie them together globally, with the product over
all places always collapsing to 1.
"""

from fractions import Fraction

from arithlab import (
    Place,
    hilbert_product_check,
    hilbert_symbol,
    is_square_in_qv,
    jacobi,
    legendre,
)

# Quadratic reciprocity in action: flipping a symbol between two primes
# that are both 1 mod 4 costs nothing.
p, q = 13, 17
print(f"({p}/{q}) = {legendre(p, q)},  ({q}/{p}) = {legendre(q, p)}")

# Jacobi symbols extend the computation to odd composite moduli.
print("(2/15) =", jacobi(2, 15))

# Local squares: 5 is a square 11-adically because 11 is 1 mod 5.
print("5 a square in Q_11?", is_square_in_qv(5, Place.finite(11)))
print("17 a square in Q_2?", is_square_in_qv(17, Place.finite(2)), " (17 = 1 mod 8)")

# The famous minimal example: -1 is a sum of two squares nowhere real
# or dyadic, and the two failures cancel in the product.
inf = Place.infinite()
print("(-1,-1) at inf:", hilbert_symbol(-1, -1, inf))
print("(-1,-1) at 2:  ", hilbert_symbol(-1, -1, Place.finite(2)))
report = hilbert_product_check(-1, -1)
print("all local factors:", report.factors, "-> product", report.product)

# Any rational pair works; places outside the support contribute 1.
report = hilbert_product_check(Fraction(-15, 7), Fraction(10, 49))
print("support places for (-15/7, 10/49):", [p for p, _ in report.factors])
print("product:", report.product)
