"""Quadratic symbols and Hilbert symbols over the rationals.

Places of Q are the archimedean place and the finite places given by
primes.  Elements of the completions are always handled as exact
rationals: squareness at a finite place reduces to valuation parity
plus a unit-residue test, so no p-adic precision policy is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import Factorization, factor, is_prime

__all__ = [
    "Place",
    "QpClass",
    "HilbertProductReport",
    "legendre",
    "jacobi",
    "is_square_in_qv",
    "hilbert_symbol",
    "hilbert_product_check",
]

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Place:
    """A place of Q: finite (a verified prime) or the archimedean one."""

    prime: int | None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @classmethod
    def infinite(cls) -> "Place":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    def __str__(self):
        return "inf" if self.prime is None else str(self.prime)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, by quadratic reciprocity."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"jacobi requires odd n >= 1, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p.

    Computed through the Jacobi reciprocity loop; the Euler-criterion
    power a^((p-1)/2) mod p serves as the independent test oracle, not
    as the implementation.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre requires an odd prime, got {p}")
    return jacobi(a, p)


def _as_fraction(a: Rational) -> Fraction:
    f = Fraction(a)
    if f == 0:
        raise ValueError("nonzero rational required")
    return f


def _valuation(f: Fraction, p: int) -> tuple[int, int, int]:
    """(v, u_num, u_den) with f = p^v * u_num/u_den and p dividing neither."""
    num, den = f.numerator, f.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, num, den


def _unit_residue(num: int, den: int, modulus: int) -> int:
    return num * pow(den, -1, modulus) % modulus


@dataclass(frozen=True)
class QpClass:
    """A nonzero element of Q_v^x in factored canonical form.

    Stores the sign and the prime factorizations of numerator and
    denominator of the lowest-terms rational; enough to read off the
    valuation and unit residue at the place, hence the square class.
    """

    place: Place
    sign: int
    numerator_factors: Factorization
    denominator_factors: Factorization

    @classmethod
    def at(cls, place: Place, value: Rational) -> "QpClass":
        f = _as_fraction(value)
        sign = 1 if f > 0 else -1
        return cls(place, sign, factor(abs(f.numerator)), factor(f.denominator))

    def value(self) -> Fraction:
        return Fraction(
            self.sign * self.numerator_factors.base, self.denominator_factors.base
        )

    def valuation(self) -> int:
        if self.place.is_infinite:
            raise ValueError("valuation undefined at the archimedean place")
        p = self.place.prime
        v = dict(self.numerator_factors.factors).get(p, 0)
        return v - dict(self.denominator_factors.factors).get(p, 0)

    def is_square(self) -> bool:
        return is_square_in_qv(self.value(), self.place)


def is_square_in_qv(a: Rational, v: Place) -> bool:
    """Is a a square in the completion of Q at v?

    At the archimedean place: a > 0.  At odd p: even valuation and unit
    part a quadratic residue mod p.  At 2: even valuation and unit part
    = 1 (mod 8).
    """
    f = _as_fraction(a)
    if v.is_infinite:
        return f > 0
    p = v.prime
    val, num, den = _valuation(f, p)
    if val % 2:
        return False
    if p == 2:
        return _unit_residue(num, den, 8) == 1
    return jacobi(_unit_residue(num, den, p), p) == 1


def _hilbert_odd(a: Fraction, b: Fraction, p: int) -> int:
    alpha, an, ad = _valuation(a, p)
    beta, bn, bd = _valuation(b, p)
    u = _unit_residue(an, ad, p)
    w = _unit_residue(bn, bd, p)
    sign = 1
    if alpha * beta * ((p - 1) // 2) % 2:
        sign = -sign
    if beta % 2 and jacobi(u, p) == -1:
        sign = -sign
    if alpha % 2 and jacobi(w, p) == -1:
        sign = -sign
    return sign


def _hilbert_dyadic(a: Fraction, b: Fraction) -> int:
    alpha, an, ad = _valuation(a, 2)
    beta, bn, bd = _valuation(b, 2)
    u = _unit_residue(an, ad, 8)
    w = _unit_residue(bn, bd, 8)
    eps_u, eps_w = (u - 1) // 2 % 2, (w - 1) // 2 % 2
    omega_u, omega_w = (u * u - 1) // 8 % 2, (w * w - 1) // 8 % 2
    exponent = eps_u * eps_w + alpha * omega_w + beta * omega_u
    return -1 if exponent % 2 else 1


def hilbert_symbol(a: Rational, b: Rational, v: Place) -> int:
    """Local Hilbert symbol (a, b)_v in {1, -1}.

    Equals 1 exactly when z^2 = a x^2 + b y^2 has a nontrivial solution
    over the completion at v; computed by the standard closed forms on
    valuations and unit residues.
    """
    fa, fb = _as_fraction(a), _as_fraction(b)
    if v.is_infinite:
        return -1 if fa < 0 and fb < 0 else 1
    if v.prime == 2:
        return _hilbert_dyadic(fa, fb)
    return _hilbert_odd(fa, fb, v.prime)


@dataclass(frozen=True)
class HilbertProductReport:
    """All potentially nontrivial local factors of (a, b) and their product."""

    a: Fraction
    b: Fraction
    factors: tuple[tuple[str, int], ...]
    product: int

    @property
    def passed(self) -> bool:
        return self.product == 1


def _support(f: Fraction) -> set[int]:
    return set(factor(abs(f.numerator)).primes()) | set(factor(f.denominator).primes())


def hilbert_product_check(a: Rational, b: Rational) -> HilbertProductReport:
    """Evaluate (a, b)_v over every place where it can differ from 1.

    Those are the archimedean place, 2, and the primes dividing the
    numerator or denominator of a or b.  The product over all places is
    1 (Hilbert reciprocity), which the report records.
    """
    fa, fb = _as_fraction(a), _as_fraction(b)
    places = [Place.infinite(), Place.finite(2)]
    for p in sorted((_support(fa) | _support(fb)) - {2}):
        places.append(Place.finite(p))
    factors = tuple((str(v), hilbert_symbol(fa, fb, v)) for v in places)
    product = 1
    for _, s in factors:
        product *= s
    return HilbertProductReport(fa, fb, factors, product)
