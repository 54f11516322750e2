"""Arithmetic progressions attached to abelian extensions of Q.

An abelian extension is encoded by a conductor m and a subgroup H of
(Z/mZ)^x: the field is the fixed field of H acting on the m-th roots of
unity.  Frobenius data, splitting sets, exact densities of progressions,
and sieve-based density estimates all reduce to residue arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

__all__ = [
    "AbelianExtensionDescriptor",
    "FrobeniusDatum",
    "ProgressionSpec",
    "frobenius",
    "in_progression",
    "splits_completely",
    "chebotarev_density",
    "natural_density_estimate",
    "intersection_density",
    "tractable_condition",
    "primes_up_to",
    "RamifiedPrimeError",
]


class RamifiedPrimeError(ValueError):
    """Raised when a Frobenius class is requested at a ramified prime."""


def _unit_group(m: int) -> frozenset[int]:
    if m == 1:
        return frozenset({0})
    return frozenset(r for r in range(1, m) if math.gcd(r, m) == 1)


def _reduction_kernel(m: int, div: int) -> frozenset[int]:
    """Kernel of (Z/mZ)^x -> (Z/div Z)^x for div | m."""
    one = 0 if div == 1 else 1
    return frozenset(r for r in _unit_group(m) if r % div == one % max(div, 1))


@dataclass(frozen=True)
class AbelianExtensionDescriptor:
    """Fixed field of a residue subgroup inside a cyclotomic field.

    Normalization at construction reduces the encoding to the minimal
    conductor: the smallest m' | m whose reduction kernel lies in the
    subgroup.  After that, a prime ramifies in the field exactly when it
    divides the conductor (this also subsumes replacing m = 2 mod 4 by
    m/2).
    """

    conductor: int
    subgroup: frozenset[int]

    def __init__(self, conductor: int, subgroup: Iterable[int]):
        if conductor < 1:
            raise ValueError(f"conductor must be >= 1, got {conductor}")
        m = conductor
        subset = frozenset(x % m for x in subgroup)
        if m == 1:
            subset = frozenset({0})
        else:
            if not subset or any(math.gcd(x, m) != 1 for x in subset):
                raise ValueError("subgroup elements must be coprime to the conductor")
            if 1 not in subset:
                raise ValueError("subgroup must contain 1")
            for x in subset:
                for y in subset:
                    if x * y % m not in subset:
                        raise ValueError("subgroup is not closed under multiplication")
        m, subset = self._minimal_conductor(m, subset)
        object.__setattr__(self, "conductor", m)
        object.__setattr__(self, "subgroup", subset)

    @staticmethod
    def _minimal_conductor(m: int, h: frozenset[int]) -> tuple[int, frozenset[int]]:
        for div in sorted(d for d in range(1, m + 1) if m % d == 0):
            if div % 4 == 2:
                continue
            if _reduction_kernel(m, div) <= h:
                if div == 1:
                    return 1, frozenset({0})
                reduced = frozenset(x % div for x in h)
                return div, reduced
        return m, h

    @property
    def degree(self) -> int:
        """Field degree over Q: phi(conductor) / |subgroup|."""
        return len(_unit_group(self.conductor)) // len(self.subgroup)

    def cosets(self) -> list[frozenset[int]]:
        m = self.conductor
        seen: set[frozenset[int]] = set()
        out = []
        for r in sorted(_unit_group(m)):
            c = frozenset(r * h % m for h in self.subgroup) if m > 1 else frozenset({0})
            if c not in seen:
                seen.add(c)
                out.append(c)
        return out

    @classmethod
    def rationals(cls) -> "AbelianExtensionDescriptor":
        return cls(1, [0])

    @classmethod
    def cyclotomic(cls, m: int) -> "AbelianExtensionDescriptor":
        return cls(m, [1])

    @classmethod
    def gaussian(cls) -> "AbelianExtensionDescriptor":
        """Conductor-4 quadratic field generated by a square root of -1."""
        return cls(4, [1])


@dataclass(frozen=True)
class FrobeniusDatum:
    """Image of an unramified prime in the coset group (Z/mZ)^x / H."""

    prime: int
    coset: frozenset[int]

    @property
    def representative(self) -> int:
        return min(self.coset)


def frobenius(ext: AbelianExtensionDescriptor, p: int) -> FrobeniusDatum:
    """Frobenius class of p: the coset of p mod conductor."""
    m = ext.conductor
    if m > 1 and math.gcd(p, m) > 1:
        raise RamifiedPrimeError(f"{p} divides the conductor {m}")
    if m == 1:
        return FrobeniusDatum(p, frozenset({0}))
    r = p % m
    return FrobeniusDatum(p, frozenset(r * h % m for h in ext.subgroup))


@dataclass(frozen=True)
class ProgressionSpec:
    """Primes whose Frobenius lies in a fixed coset, minus a finite set."""

    extension: AbelianExtensionDescriptor
    coset: frozenset[int]
    excluded: frozenset[int] = field(default_factory=frozenset)

    def __init__(self, extension, coset: Iterable[int], excluded: Iterable[int] = ()):
        m = extension.conductor
        cset = frozenset(x % m for x in coset)
        if m == 1:
            cset = frozenset({0})
        else:
            rep = min(cset)
            expected = frozenset(rep * h % m for h in extension.subgroup)
            if cset != expected:
                raise ValueError("class is not a coset of the subgroup")
        object.__setattr__(self, "extension", extension)
        object.__setattr__(self, "coset", cset)
        object.__setattr__(self, "excluded", frozenset(excluded))

    @classmethod
    def residue_class(cls, a: int, m: int, excluded: Iterable[int] = ()) -> "ProgressionSpec":
        """The progression of primes p = a (mod m).

        For m = 2 mod 4 the encoding collapses to conductor m/2, so the
        set is the Frobenius-defined one, which may additionally contain
        the prime 2; pass it in excluded to recover the literal residue
        class.
        """
        if math.gcd(a, m) != 1:
            raise ValueError(f"residue {a} is not invertible mod {m}")
        ext = AbelianExtensionDescriptor.cyclotomic(m)
        a %= ext.conductor
        return cls(ext, [a if ext.conductor > 1 else 0], excluded)


def in_progression(spec: ProgressionSpec, p: int) -> bool:
    """Does the prime p belong to the progression?"""
    if p in spec.excluded:
        return False
    m = spec.extension.conductor
    if m > 1 and math.gcd(p, m) > 1:
        return False
    return frobenius(spec.extension, p).coset == spec.coset


def splits_completely(ext: AbelianExtensionDescriptor, p: int) -> bool:
    """True when p is unramified with trivial Frobenius class."""
    m = ext.conductor
    if m > 1 and math.gcd(p, m) > 1:
        return False
    return frobenius(ext, p).coset == (ext.subgroup if m > 1 else frozenset({0}))


def chebotarev_density(spec: ProgressionSpec) -> Fraction:
    """Exact Dirichlet density of the progression: |H| / phi(m).

    A finite excluded set has density zero and does not change the
    value.
    """
    m = spec.extension.conductor
    return Fraction(len(spec.extension.subgroup), len(_unit_group(m)))


@lru_cache(maxsize=8)
def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes <= bound via a vectorized sieve of Eratosthenes."""
    if bound < 2:
        return ()
    mask = np.ones(bound + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(mask))


def natural_density_estimate(spec: ProgressionSpec, x_bound: int) -> float:
    """pi(x; spec) / pi(x) from an exact sieve count.

    This estimates the natural density of the progression, which for
    these sets coincides with the Dirichlet density returned by
    chebotarev_density.
    """
    if x_bound < 1000:
        raise ValueError(f"x_bound must be >= 1000, got {x_bound}")
    primes = np.array(primes_up_to(x_bound), dtype=np.int64)
    m = spec.extension.conductor
    if m == 1:
        mask = np.ones(len(primes), dtype=bool)
    else:
        residues = np.array(sorted(spec.coset), dtype=np.int64)
        mask = np.isin(primes % m, residues)
    if spec.excluded:
        mask &= ~np.isin(primes, np.array(sorted(spec.excluded), dtype=np.int64))
    return float(np.count_nonzero(mask)) / float(len(primes))


def _lifted_subgroup(ext: AbelianExtensionDescriptor, m: int) -> frozenset[int]:
    """Preimage of ext.subgroup in (Z/mZ)^x, for ext.conductor | m."""
    d = ext.conductor
    if d == 1:
        return _unit_group(m)
    return frozenset(r for r in _unit_group(m) if r % d in ext.subgroup)


def _lifted_coset(spec: ProgressionSpec, m: int) -> frozenset[int]:
    d = spec.extension.conductor
    if d == 1:
        return _unit_group(m)
    return frozenset(r for r in _unit_group(m) if r % d in spec.coset)


def intersection_density(
    spec: ProgressionSpec, ext2: AbelianExtensionDescriptor
) -> Fraction:
    """Exact density of {p in spec : p splits completely in ext2}.

    Both conditions become residue conditions modulo the lcm of the two
    conductors, where the count is exact.
    """
    m = math.lcm(spec.extension.conductor, ext2.conductor)
    units = _unit_group(m)
    good = _lifted_coset(spec, m) & _lifted_subgroup(ext2, m)
    return Fraction(len(good), len(units))


def tractable_condition(
    spec: ProgressionSpec, target_ext: AbelianExtensionDescriptor
) -> bool:
    """Does the progression's class fix the intersection with the target field?

    The class maps to an automorphism of (target field) intersect
    (progression field); the condition holds when that restriction is
    the identity.  Computed inside (Z/lcm Z)^x: the subgroup fixing the
    intersection field is the product of the two lifted subgroups, and
    the condition is membership of the lifted class in it.
    """
    m = math.lcm(spec.extension.conductor, target_ext.conductor)
    h_spec = _lifted_subgroup(spec.extension, m)
    h_target = _lifted_subgroup(target_ext, m)
    product = frozenset(a * b % m for a in h_spec for b in h_target) if m > 1 else frozenset({0})
    lifted = _lifted_coset(spec, m)
    rep = min(lifted)
    return rep in product
