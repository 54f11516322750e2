"""The explicit constant ladder and index-bound evaluators.

All returned values are exact integers or exact rationals.  Some rungs
of the ladder are astronomically large; a configurable decimal-digit
cap (environment variable ASA_DIGIT_CAP, default one million digits)
guards materialization.  Above the cap the evaluators raise
DigitCapExceeded carrying a size report whose digit counts come from
logarithms and are flagged as approximate -- never a silently truncated
value.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import factor

__all__ = [
    "BoundReport",
    "DigitCapExceeded",
    "PowerSize",
    "default_digit_cap",
    "gamma",
    "lam",
    "psi",
    "psi_size",
    "c_tilde",
    "c_tilde_improved",
    "c_reductive",
    "dirichlet_index_bound",
    "galois_index_bound",
    "spl0_index_bound",
    "t1_density_bound",
    "divides_power",
]

DIGIT_CAP_ENV = "ASA_DIGIT_CAP"
DEFAULT_DIGIT_CAP = 10**6


def default_digit_cap() -> int:
    """Digit cap from the environment, falling back to one million."""
    raw = os.environ.get(DIGIT_CAP_ENV)
    if raw is None:
        return DEFAULT_DIGIT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{DIGIT_CAP_ENV} must be a positive integer, got {raw}")
    return cap


def _compact_int(n: int) -> str:
    """Decimal rendering that never explodes: huge values become a
    digit-count description."""
    if n < 10**40:
        return str(n)
    digits = int(math.log10(n)) + 1
    return f"<{digits}-digit integer>"


@dataclass(frozen=True)
class PowerSize:
    """Size report for base**exponent without materializing it.

    digits10 is floor(exponent * log10(base)) + 1 computed in floating
    point, hence approximate; for readability it is also rendered in
    scientific notation when enormous.
    """

    base: int
    exponent: int
    digits10: str
    approximate: bool = True

    @classmethod
    def of(cls, base: int, exponent: int) -> "PowerSize":
        if base < 2 or exponent < 1:
            raise ValueError("size reports are for base >= 2, exponent >= 1")
        log_digits = math.log10(exponent) + math.log10(math.log10(base))
        if log_digits < 15:
            digits = int(exponent * math.log10(base)) + 1
            return cls(base, exponent, str(digits))
        frac, whole = math.modf(log_digits)
        return cls(base, exponent, f"{10 ** frac:.4f}e+{int(whole)}")

    def describe(self) -> str:
        return (
            f"{_compact_int(self.base)}^{_compact_int(self.exponent)} "
            f"with about {self.digits10} decimal digits"
        )


def _exceeds_digits(base: int, exponent: int, cap: int) -> bool:
    """Would base**exponent have more than cap decimal digits?

    Works even when the exponent is itself astronomically large: the
    comparison then happens on logarithms of logarithms.
    """
    if base < 2 or exponent < 1:
        return False
    log_base = math.log10(base)
    if exponent <= 10**12:
        return exponent * log_base + 1 > cap
    return math.log10(exponent) + math.log10(log_base) > math.log10(cap)


class DigitCapExceeded(ArithmeticError):
    """An exact value would exceed the digit cap; carries the size report."""

    def __init__(self, name: str, size: PowerSize, cap: int):
        self.name = name
        self.size = size
        self.cap = cap
        super().__init__(
            f"{name} = {size.describe()}, beyond the {cap}-digit cap"
        )


@dataclass(frozen=True)
class BoundReport:
    """A named exact value together with its inputs and formula."""

    name: str
    inputs: tuple[tuple[str, str], ...]
    value: Union[int, Fraction]
    formula: str


def gamma(d: int) -> int:
    """Order of the d x d general linear group over the three-element field.

    gamma(d) = prod_{i=0}^{d-1} (3^d - 3^i); every finite subgroup of
    GL_d(Z) has order dividing it.
    """
    if d < 1:
        raise ValueError(f"gamma requires d >= 1, got {d}")
    out = 1
    q = 3**d
    for i in range(d):
        out *= q - 3**i
    return out


def lam(d: int) -> int:
    """Dimension bound for the kernel torus: lam(d) = d * (gamma(d) - 1)."""
    if d < 1:
        raise ValueError(f"lam requires d >= 1, got {d}")
    return d * (gamma(d) - 1)


def _checked_power(name: str, base: int, exponent: int, cap: int | None) -> int:
    cap = default_digit_cap() if cap is None else cap
    if _exceeds_digits(base, exponent, cap):
        raise DigitCapExceeded(name, PowerSize.of(base, exponent), cap)
    return base**exponent


def psi(d: int, cap: int | None = None) -> int:
    """The H^1 order bound psi(d) = gamma(d)^(d * (gamma(d) - 1)).

    Exact big integer; raises DigitCapExceeded when the value would
    exceed the digit cap (d = 4 already needs about 7 * 10^8 digits).
    """
    if d < 1:
        raise ValueError(f"psi requires d >= 1, got {d}")
    return _checked_power(f"psi({d})", gamma(d), lam(d), cap)


def psi_size(d: int) -> PowerSize:
    """Size report for psi(d) without materializing it."""
    return PowerSize.of(gamma(d), lam(d))


def c_tilde(d: int, n: int, cap: int | None = None) -> int:
    """Index bound for d-dimensional tori: n^d * psi(lam(d)).

    Already for d = 2 the psi factor is psi(94), far beyond any digit
    cap, so expect DigitCapExceeded outside d = 1.
    """
    if d < 1 or n < 1:
        raise ValueError("c_tilde requires d, n >= 1")
    ld = lam(d)
    psi_factor = psi(ld, cap)
    return n**d * psi_factor


def c_tilde_improved(d: int, n: int, cap: int | None = None) -> int:
    """Sharper torus index bound: n^d * gamma(d)^(lam(d) * (gamma(d) - 1))."""
    if d < 1 or n < 1:
        raise ValueError("c_tilde_improved requires d, n >= 1")
    power = _checked_power(
        f"c_tilde_improved({d}, {n})", gamma(d), lam(d) * (gamma(d) - 1), cap
    )
    return n**d * power


def c_reductive(ell: int, n: int, r: int, cap: int | None = None) -> int:
    """Reductive-group index bound: 2^(ell * r) * c_tilde(ell, n)."""
    if ell < 1 or n < 1:
        raise ValueError("c_reductive requires ell, n >= 1")
    if r < 0:
        raise ValueError("real-place count must be nonnegative")
    return 2 ** (ell * r) * c_tilde(ell, n, cap)


def dirichlet_index_bound(f_degree: int, density: Fraction) -> Fraction:
    """Closure index bound 1 / (degree * density) from a positive-density
    split subset."""
    density = Fraction(density)
    if f_degree < 1:
        raise ValueError("degree must be >= 1")
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    return 1 / (f_degree * density)


def galois_index_bound(fl_over_f: int, class_size: int) -> Fraction:
    """Galois-case refinement of the index bound: [FL : F] / |class|."""
    if fl_over_f < 1 or class_size < 1:
        raise ValueError("both arguments must be >= 1")
    return Fraction(fl_over_f, class_size)


def spl0_index_bound(density: Fraction) -> Fraction:
    """Index bound 1 / density when only one split extension per place is
    guaranteed."""
    density = Fraction(density)
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    return 1 / density


def t1_density_bound(d: int, density: Fraction, cap: int | None = None) -> BoundReport:
    """Torus index bound density^(-d) * psi(lam(d)), as an exact report."""
    density = Fraction(density)
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    value = Fraction(1, 1) / density**d * psi(lam(d), cap)
    if value.denominator == 1:
        value = int(value)
    return BoundReport(
        name="t1_density_bound",
        inputs=(("d", str(d)), ("density", str(density))),
        value=value,
        formula="density^(-d) * psi(lam(d))",
    )


def divides_power(m: int, base: int, exponent: int) -> bool:
    """Does m divide base**exponent, decided without materializing the power?

    Factors the base (which must stay in factoring range) and strips its
    primes out of m with capped multiplicities, so m itself may be
    arbitrarily large.
    """
    if m < 1 or base < 1 or exponent < 0:
        raise ValueError("divides_power requires m, base >= 1 and exponent >= 0")
    if m == 1:
        return True
    if base == 1:
        return False
    for p, avail in factor(base).factors:
        need = 0
        while m % p == 0:
            m //= p
            need += 1
        if need > avail * exponent:
            return False
    return m == 1
