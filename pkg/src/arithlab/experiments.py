"""Executable experiments: biased prime pairs, density witnesses in open
congruence sets, local-square evidence along split primes, constrained
norm-one units of the Gaussian integers, and products of local power
indices with their divergent lower bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import crt_solve, is_prime, next_prime_in_progression
from .progressions import primes_up_to
from .symbols import Place, hilbert_symbol, is_square_in_qv, legendre

__all__ = [
    "BiasedPrimePair",
    "CongruenceTarget",
    "GaussianInteger",
    "ArtinKernelReport",
    "PowerIndexReport",
    "build_biased_prime_sets",
    "density_witness",
    "artin_kernel_evidence",
    "norm_one_constrained_units",
    "local_power_index",
    "section7_index_bound",
]


@dataclass(frozen=True)
class BiasedPrimePair:
    """Disjoint prime lists P, Q inside 1 mod 4 with (p/q) = 1 throughout."""

    p_list: tuple[int, ...]
    q_list: tuple[int, ...]

    def __post_init__(self):
        if set(self.p_list) & set(self.q_list):
            raise ValueError("prime lists must be disjoint")
        for x in self.p_list + self.q_list:
            if x % 4 != 1 or not is_prime(x):
                raise ValueError(f"{x} is not a prime congruent to 1 mod 4")
        for p in self.p_list:
            for q in self.q_list:
                if legendre(p, q) != 1:
                    raise ValueError(f"symbol ({p}/{q}) is not 1")


def build_biased_prime_sets(ell: int) -> BiasedPrimePair:
    """Grow P and Q inductively so every cross Legendre symbol is 1.

    Start with p_1 = 5 and q_1 the smallest prime that is 1 mod 4 and
    1 mod p_1; then alternately take p_(l+1) as the smallest prime that
    is 1 mod 4 and 1 mod q_1...q_l, and q_(l+1) likewise with the p's
    swapped in.  Quadratic reciprocity then forces all cross symbols to
    1, which the returned value re-certifies by direct evaluation.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    p_list = [5]
    q_list: list[int] = []
    while len(q_list) < ell:
        prod_p = math.prod(p_list)
        q_list.append(next_prime_in_progression(1, 4 * prod_p, 1))
        if len(p_list) < ell:
            prod_q = math.prod(q_list)
            p_list.append(next_prime_in_progression(1, 4 * prod_q, 1))
    return BiasedPrimePair(tuple(p_list), tuple(q_list))


@dataclass(frozen=True)
class CongruenceTarget:
    """A basic open congruence set: unit conditions a_i mod p_i^alpha_i.

    The conditions describe the set prod (a_i + p_i^alpha_i Z_p_i) times
    units everywhere else.  The dyadic condition must be present; the
    other primes must avoid the residue class 1 mod 4.
    """

    conditions: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        primes = [p for p, _, _ in self.conditions]
        if len(set(primes)) != len(primes):
            raise ValueError("condition primes must be distinct")
        if 2 not in primes:
            raise ValueError("a condition at 2 is required")
        for p, alpha, a in self.conditions:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if p % 4 == 1:
                raise ValueError(f"condition prime {p} lies in 1 mod 4")
            if alpha < 1:
                raise ValueError("exponents must be >= 1")
            if math.gcd(a, p) != 1:
                raise ValueError(f"residue {a} is not a unit at {p}")

    def dyadic(self) -> tuple[int, int]:
        for p, alpha, a in self.conditions:
            if p == 2:
                return alpha, a
        raise AssertionError("unreachable")

    def contains(self, sign: int, prime: int) -> bool:
        """Does sign * prime satisfy every condition (and stay a unit
        outside them)?"""
        value = sign * prime
        for p, alpha, a in self.conditions:
            if (value - a) % p**alpha != 0:
                return False
        return prime % 4 == 1


def density_witness(target: CongruenceTarget) -> tuple[int, int]:
    """A signed prime (eps, p) with eps * p inside the target open set.

    The sign is fixed so that eps * a_2 = 1 (mod 4), the combined
    congruence is solved by the Chinese Remainder Theorem, and p is the
    smallest prime in the resulting residue class; then eps * p meets
    every local condition, with p itself in 1 mod 4.
    """
    alpha2, a2 = target.dyadic()
    eps = 1 if a2 % 4 == 1 else -1
    congruences = [(eps * a, p**alpha) for p, alpha, a in target.conditions]
    congruences.append((1, 4))
    c, modulus = crt_solve(congruences)
    p = next_prime_in_progression(c, modulus, 1)
    if not target.contains(eps, p):
        raise AssertionError(f"witness {eps} * {p} fails its own congruences")
    return eps, p


@dataclass(frozen=True)
class ArtinKernelReport:
    """Local-square evidence at every split place up to a bound."""

    q: int
    sample_bound: int
    checked_primes: tuple[int, ...]
    failures: tuple[int, ...]
    sampled_symbols: tuple[tuple[str, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures and all(s == 1 for _, s in self.sampled_symbols)


def artin_kernel_evidence(q: int, sample_bound: int) -> ArtinKernelReport:
    """Verify that q is a local square along the primes splitting in the
    degree-q cyclotomic direction.

    For q = 1 (mod 4) prime, checks q > 0 (square at the archimedean
    place) and, for every prime p <= sample_bound with p = 1 (mod q),
    that q is a square in the p-adic field -- so every Hilbert symbol
    (x, q)_p collapses to 1, a few of which are sampled directly.
    """
    if q % 4 != 1 or not is_prime(q):
        raise ValueError(f"q must be a prime congruent to 1 mod 4, got {q}")
    checked = tuple(p for p in primes_up_to(sample_bound) if p % q == 1)
    failures = []
    for p in checked:
        square = is_square_in_qv(q, Place.finite(p))
        reciprocity = legendre(p % q, q) == 1 and legendre(q, p) == 1
        if not (square and reciprocity):
            failures.append(p)
    sampled = []
    for p in checked[:3]:
        for x in (Fraction(2), Fraction(-3, 7), Fraction(p), Fraction(1, 2)):
            sampled.append((f"({x}, {q})_{p}", hilbert_symbol(x, q, Place.finite(p))))
    return ArtinKernelReport(q, sample_bound, checked, tuple(failures), tuple(sampled))


@dataclass(frozen=True)
class GaussianInteger:
    """Exact element a + b i of the Gaussian integers."""

    a: int
    b: int

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def conjugate(self) -> "GaussianInteger":
        return GaussianInteger(self.a, -self.b)

    def __mul__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __neg__(self) -> "GaussianInteger":
        return GaussianInteger(-self.a, -self.b)

    def __str__(self):
        return f"{self.a}{self.b:+d}i"


GAUSSIAN_UNITS = (
    GaussianInteger(1, 0),
    GaussianInteger(-1, 0),
    GaussianInteger(0, 1),
    GaussianInteger(0, -1),
)


def _padic_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _odd_prime_factors(n: int) -> list[int]:
    out = []
    d = 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


def norm_one_constrained_units(height_bound: int) -> list[GaussianInteger]:
    """Constrained norm-one elements conj(y)/y that stay integral at the
    split primes.

    Sweeps y = u + v i with |u|, |v| <= height_bound and keeps
    x = conj(y)/y only when, at every prime p = 1 (mod 4) dividing the
    norm of y, the two valuations of y above p agree -- equivalently
    v_p(norm) = 2 v_p(gcd(u, v)).  Everywhere else x is automatically a
    unit, so survivors are honest units of the Gaussian integers; the
    finiteness claim being tested is that exactly the four units appear.
    """
    if height_bound < 1:
        raise ValueError("height bound must be >= 1")
    survivors: set[GaussianInteger] = set()
    for u in range(-height_bound, height_bound + 1):
        for v in range(-height_bound, height_bound + 1):
            if u == 0 and v == 0:
                continue
            norm = u * u + v * v
            odd_part = norm >> _padic_valuation(norm, 2)
            content = math.gcd(u, v)
            ok = True
            for p in _odd_prime_factors(odd_part):
                if p % 4 != 1:
                    continue
                if _padic_valuation(norm, p) != 2 * _padic_valuation(content, p):
                    ok = False
                    break
            if not ok:
                continue
            # x = conj(y)/y = ((u^2 - v^2) - 2uv i) / (u^2 + v^2)
            re = Fraction(u * u - v * v, norm)
            im = Fraction(-2 * u * v, norm)
            if re.denominator != 1 or im.denominator != 1:
                raise AssertionError(
                    f"survivor {u}+{v}i produced a non-integral quotient"
                )
            survivors.add(GaussianInteger(int(re), int(im)))
    return sorted(survivors, key=lambda z: (z.a, z.b))


def local_power_index(p: int, n: int) -> int:
    """Index of the n-th powers in the unit group modulo p.

    Requires the tame split case: p = 1 (mod 4) and p not dividing n.
    The value gcd(n, p - 1) is cross-checked by explicitly counting
    n-th powers in the multiplicative group mod p.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 4 != 1:
        raise ValueError(f"p must be 1 mod 4, got {p}")
    if n % p == 0:
        raise ValueError(f"wild case p | n rejected (p = {p}, n = {n})")
    index = math.gcd(n, p - 1)
    powers = {pow(x, n, p) for x in range(1, p)}
    if len(powers) * index != p - 1:
        raise AssertionError(f"power count disagrees with gcd at p = {p}, n = {n}")
    return index


@dataclass(frozen=True)
class PowerIndexReport:
    """Product of local power indices and the resulting index lower bound."""

    n: int
    ell: int
    primes: tuple[int, ...]
    local_indices: tuple[int, ...]
    product: int
    lower_bound: Fraction
    partial_bounds: tuple[Fraction, ...]
    monotone: bool

    @property
    def passed(self) -> bool:
        return self.product == self.n**self.ell and self.monotone


def section7_index_bound(n: int, ell: int, primes: Sequence[int]) -> PowerIndexReport:
    """Exact index product n^ell and the lower bound n^ell / 4.

    The primes must be distinct and lie in 1 mod 4n, so each local index
    equals n; the report records the per-prime indices, their product,
    the bound, and the growth of the bound across 1..ell.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    primes = tuple(primes)
    if len(primes) != ell:
        raise ValueError(f"expected {ell} primes, got {len(primes)}")
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"list element {p} is not prime")
        if p % (4 * n) != 1:
            raise ValueError(f"list element {p} is not 1 mod {4 * n}")
    local = tuple(local_power_index(p, n) for p in primes)
    product = math.prod(local)
    partials = tuple(Fraction(n**j, 4) for j in range(1, ell + 1))
    monotone = all(x < y for x, y in zip(partials, partials[1:]))
    return PowerIndexReport(
        n=n,
        ell=ell,
        primes=primes,
        local_indices=local,
        product=product,
        lower_bound=Fraction(product, 4),
        partial_bounds=partials,
        monotone=monotone,
    )
