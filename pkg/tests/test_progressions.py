import math
from fractions import Fraction

import pytest

from arithlab.core import is_prime
from arithlab.progressions import (
    AbelianExtensionDescriptor,
    ProgressionSpec,
    RamifiedPrimeError,
    chebotarev_density,
    frobenius,
    in_progression,
    intersection_density,
    natural_density_estimate,
    primes_up_to,
    splits_completely,
    tractable_condition,
)

GAUSSIAN = AbelianExtensionDescriptor.gaussian()
P14 = ProgressionSpec.residue_class(1, 4)
P34 = ProgressionSpec.residue_class(3, 4)


class TestDescriptor:
    def test_subgroup_must_contain_one(self):
        with pytest.raises(ValueError):
            AbelianExtensionDescriptor(8, [3])

    def test_subgroup_must_be_closed(self):
        with pytest.raises(ValueError):
            AbelianExtensionDescriptor(8, [1, 3, 5])

    def test_elements_must_be_units(self):
        with pytest.raises(ValueError):
            AbelianExtensionDescriptor(8, [1, 2])

    def test_minimal_conductor_reduction(self):
        # Conductor 8 with kernel subgroup {1, 5} is really the
        # conductor-4 field.
        ext = AbelianExtensionDescriptor(8, [1, 5])
        assert ext.conductor == 4 and ext.subgroup == frozenset({1})
        assert ext == GAUSSIAN

    def test_twice_odd_conductor_collapses(self):
        ext = AbelianExtensionDescriptor(6, [1])
        assert ext.conductor == 3

    def test_whole_group_is_the_rationals(self):
        ext = AbelianExtensionDescriptor(12, [1, 5, 7, 11])
        assert ext.conductor == 1
        assert ext.degree == 1

    def test_degree(self):
        assert GAUSSIAN.degree == 2
        assert AbelianExtensionDescriptor.cyclotomic(5).degree == 4
        assert AbelianExtensionDescriptor(8, [1, 7]).degree == 2

    def test_real_quadratic_conductor_8_not_reduced(self):
        ext = AbelianExtensionDescriptor(8, [1, 7])
        assert ext.conductor == 8


class TestFrobenius:
    def test_split_class(self):
        assert frobenius(GAUSSIAN, 5).coset == frozenset({1})

    def test_inert_class(self):
        assert frobenius(GAUSSIAN, 3).coset == frozenset({3})

    def test_conductor_8_example(self):
        ext = AbelianExtensionDescriptor(8, [1, 7])
        assert 1 in frobenius(ext, 17).coset

    def test_ramified_rejected(self):
        with pytest.raises(RamifiedPrimeError):
            frobenius(GAUSSIAN, 2)

    def test_multiplicative_on_residues(self):
        ext = AbelianExtensionDescriptor.cyclotomic(20)
        m = ext.conductor
        for p1 in (3, 7, 13, 23):
            for p2 in (11, 17, 19):
                c1 = frobenius(ext, p1).coset
                c2 = frobenius(ext, p2).coset
                prod = frozenset(a * b % m for a in c1 for b in c2)
                assert prod == frozenset(
                    (p1 * p2 % m) * h % m for h in ext.subgroup
                )


class TestInProgression:
    def test_member(self):
        assert in_progression(P14, 13) is True

    def test_ramified_is_out(self):
        assert in_progression(P14, 2) is False

    def test_degree_five_progression(self):
        assert in_progression(ProgressionSpec.residue_class(1, 5), 11) is True

    def test_excluded_list(self):
        spec = ProgressionSpec.residue_class(1, 4, excluded=[13])
        assert in_progression(spec, 13) is False
        assert in_progression(spec, 17) is True

    def test_class_must_be_coset(self):
        ext = AbelianExtensionDescriptor(8, [1, 7])
        with pytest.raises(ValueError):
            ProgressionSpec(ext, [1, 3])


class TestSplitsCompletely:
    @pytest.mark.parametrize("p,expected", [(5, True), (3, False), (2, False)])
    def test_gaussian(self, p, expected):
        assert splits_completely(GAUSSIAN, p) is expected

    def test_matches_trivial_class_progression(self):
        ext = AbelianExtensionDescriptor(8, [1, 7])
        spec = ProgressionSpec(ext, ext.subgroup)
        for p in primes_up_to(200):
            if math.gcd(p, ext.conductor) == 1:
                assert splits_completely(ext, p) == in_progression(spec, p)


class TestChebotarevDensity:
    def test_examples(self):
        assert chebotarev_density(P14) == Fraction(1, 2)
        assert chebotarev_density(ProgressionSpec.residue_class(1, 5)) == Fraction(1, 4)

    def test_whole_group(self):
        ext = AbelianExtensionDescriptor(4, [1, 3])
        assert chebotarev_density(ProgressionSpec(ext, [0])) == 1

    @pytest.mark.parametrize("m,h", [(4, [1]), (8, [1, 7]), (15, [1]), (24, [1, 7])])
    def test_cosets_sum_to_one(self, m, h):
        ext = AbelianExtensionDescriptor(m, h)
        total = sum(
            chebotarev_density(ProgressionSpec(ext, c)) for c in ext.cosets()
        )
        assert total == 1

    def test_excluded_does_not_change_density(self):
        spec = ProgressionSpec.residue_class(1, 4, excluded=[5, 13])
        assert chebotarev_density(spec) == Fraction(1, 2)


class TestNaturalDensityEstimate:
    def test_all_primes(self):
        ext = AbelianExtensionDescriptor.rationals()
        spec = ProgressionSpec(ext, [0])
        assert natural_density_estimate(spec, 10**5) == 1.0

    def test_rejects_small_bound(self):
        with pytest.raises(ValueError):
            natural_density_estimate(P14, 100)

    @pytest.mark.parametrize(
        "a,m,density",
        [(1, 4, 0.5), (3, 4, 0.5), (1, 5, 0.25), (1, 8, 0.25), (5, 24, 0.125)],
    )
    def test_tracks_exact_density(self, a, m, density):
        spec = ProgressionSpec.residue_class(a, m)
        assert abs(natural_density_estimate(spec, 10**5) - density) < 0.01

    def test_sieve_against_direct_count(self):
        primes = primes_up_to(3000)
        assert len(primes) == sum(1 for n in range(2, 3001) if is_prime(n))
        count = sum(1 for p in primes if p % 4 == 1)
        assert natural_density_estimate(P14, 3000) == count / len(primes)

    def test_all_conductors_up_to_24_at_one_million(self):
        for m in range(3, 25):
            ext = AbelianExtensionDescriptor.cyclotomic(m)
            for a in range(1, m):
                if math.gcd(a, m) != 1:
                    continue
                spec = ProgressionSpec(ext, [a % ext.conductor])
                exact = float(chebotarev_density(spec))
                assert abs(natural_density_estimate(spec, 10**6) - exact) <= 0.02


class TestIntersectionDensity:
    def test_containment(self):
        assert intersection_density(P14, GAUSSIAN) == Fraction(1, 2)

    def test_disjoint(self):
        assert intersection_density(P34, GAUSSIAN) == 0

    def test_cross_conductor(self):
        ext5 = AbelianExtensionDescriptor.cyclotomic(5)
        assert intersection_density(P14, ext5) == Fraction(1, 8)

    def test_matches_sieve_count(self):
        ext5 = AbelianExtensionDescriptor.cyclotomic(5)
        primes = [p for p in primes_up_to(10**5) if p > 20]
        hits = sum(
            1 for p in primes if in_progression(P14, p) and splits_completely(ext5, p)
        )
        assert abs(hits / len(primes) - 0.125) < 0.01


class TestTractableCondition:
    def test_split_progression_fixes_gaussian_field(self):
        assert tractable_condition(P14, GAUSSIAN) is True

    def test_inert_progression_moves_gaussian_field(self):
        assert tractable_condition(P34, GAUSSIAN) is False

    def test_rational_target_always_passes(self):
        rationals = AbelianExtensionDescriptor.rationals()
        for spec in (P14, P34, ProgressionSpec.residue_class(2, 3)):
            assert tractable_condition(spec, rationals) is True

    def test_equivalence_with_positive_intersection(self):
        # In the abelian setting, the restriction condition holds exactly
        # when the progression meets the split set with positive density.
        targets = [
            GAUSSIAN,
            AbelianExtensionDescriptor.cyclotomic(5),
            AbelianExtensionDescriptor(8, [1, 7]),
            AbelianExtensionDescriptor.cyclotomic(3),
            AbelianExtensionDescriptor(12, [1, 11]),
        ]
        specs = [
            ProgressionSpec.residue_class(a, m)
            for m in (3, 4, 5, 8, 12)
            for a in range(1, m)
            if math.gcd(a, m) == 1
        ]
        for spec in specs:
            for target in targets:
                cond = tractable_condition(spec, target)
                dens = intersection_density(spec, target)
                assert cond == (dens > 0), (spec, target)


class TestPrimesUpTo:
    def test_small(self):
        assert primes_up_to(20) == (2, 3, 5, 7, 11, 13, 17, 19)

    def test_empty(self):
        assert primes_up_to(1) == ()
