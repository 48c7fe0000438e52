#!/usr/bin/env python3
"""
Pruebas de los tipos base: dominios, etiquetados y distribuciones finitas.
"""
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from app.core import (
    FiniteDistribution, FiniteDomain, Labelling, abstract_domain, cube_domain, dist_between,
    full_cube_domain, labelled_sample, normalize, real_line_domain, sample,
)
from app.utils.error_handler import DegenerateInputError, DomainMismatchError


class TestFiniteDomain:
    """Construcción y validación de dominios"""

    def test_duplicate_points_rejected(self):
        with pytest.raises(DegenerateInputError):
            real_line_domain([1, 2, 2])

    def test_real_line_points_are_exact(self):
        S = real_line_domain([1, "1/2"])
        assert S.points == ((Fraction(1),), (Fraction(1, 2),))
        assert S.dimension == 1

    def test_cube_rejects_non_bits(self):
        with pytest.raises(DegenerateInputError):
            cube_domain([(0, 2)])

    def test_mixed_dimension_rejected(self):
        with pytest.raises(DegenerateInputError):
            FiniteDomain(((1, 2), (1, 2, 3)), "real-space")

    def test_full_cube_order(self):
        assert full_cube_domain(2).points == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_index_of_unknown_point(self):
        with pytest.raises(DomainMismatchError):
            abstract_domain(3).index_of(7)


class TestLabelling:
    """Etiquetados como cadenas de bits"""

    def test_string_round_trip(self, line4):
        f = Labelling.from_string(line4, "1010")
        assert f.as_string() == "1010"
        assert f.ones() == 2
        assert f.complement().as_string() == "0101"

    def test_wrong_length(self, line4):
        with pytest.raises(DomainMismatchError):
            Labelling.from_string(line4, "101")

    def test_non_binary(self, line4):
        with pytest.raises(DegenerateInputError):
            Labelling.from_string(line4, "1021")


class TestDistribution:
    """Pesos, normalización y distancia entre etiquetados"""

    def test_weights_must_sum_to_one(self, range5):
        with pytest.raises(DegenerateInputError):
            FiniteDistribution(range5, (Fraction(1, 5),) * 4 + (Fraction(1, 4),))

    def test_uniform_on_subset(self, range5):
        D = FiniteDistribution.uniform(range5, [1, 3])
        assert D.support == (1, 3)
        assert D.weight(1) == Fraction(1, 2)
        assert D.weight(0) == 0

    def test_empty_support_rejected(self, range5):
        with pytest.raises(DegenerateInputError):
            FiniteDistribution.uniform(range5, [])

    @pytest.mark.parametrize("raw,expected", [
        ((1, 1, 1, 1), (Fraction(1, 4),) * 4),
        ((2, 0, 2), (Fraction(1, 2), 0, Fraction(1, 2))),
        ((3, 1), (Fraction(3, 4), Fraction(1, 4))),
    ])
    def test_normalize_exact(self, raw, expected):
        assert normalize(raw).weights == expected

    def test_normalize_float_mode(self):
        D = normalize([1.0, 3.0])
        assert not D.exact
        assert D.weights == pytest.approx((0.25, 0.75))

    def test_normalize_all_zero(self):
        with pytest.raises(DegenerateInputError):
            normalize([0, 0])

    def test_density_promise(self, range5):
        assert FiniteDistribution.uniform(range5).satisfies_density_promise()
        assert normalize([1, 1, 1, 1, 0, 0]).satisfies_density_promise()
        assert not normalize([1, 99]).satisfies_density_promise()

    def test_dist_between_example(self):
        S = abstract_domain(4)
        D = FiniteDistribution.uniform(S)
        f = Labelling(S, (1, 0, 1, 0))
        g = Labelling(S, (1, 1, 1, 1))
        assert dist_between(f, g, D) == Fraction(1, 2)
        assert dist_between(f, f, D) == 0
        assert dist_between(f, f.complement(), D) == 1

    def test_dist_between_domain_mismatch(self, line4):
        D = FiniteDistribution.uniform(abstract_domain(4))
        f = Labelling.constant(line4, 0)
        with pytest.raises(DomainMismatchError):
            dist_between(f, f, D)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)), min_size=1, max_size=8),
           st.lists(st.integers(1, 9), min_size=8, max_size=8))
    def test_dist_between_is_pseudometric(self, triples, raw):
        S = abstract_domain(len(triples))
        D = normalize(raw[:len(triples)], S)
        f, g, h = (Labelling(S, tuple(t[i] for t in triples)) for i in range(3))
        assert dist_between(f, g, D) == dist_between(g, f, D)
        assert dist_between(f, h, D) <= dist_between(f, g, D) + dist_between(g, h, D)


class TestSampling:
    """Muestreo i.i.d. reproducible"""

    def test_point_mass(self, range5):
        D = FiniteDistribution.point_mass(range5, 3)
        assert sample(D, 5, seed=1) == [3] * 5

    def test_zero_samples(self, range5):
        assert sample(FiniteDistribution.uniform(range5), 0, seed=1) == []

    def test_negative_m(self, range5):
        with pytest.raises(DegenerateInputError):
            sample(FiniteDistribution.uniform(range5), -1, seed=1)

    def test_same_seed_same_draws(self, range5):
        D = FiniteDistribution.uniform(range5)
        assert sample(D, 50, seed=42) == sample(D, 50, seed=42)

    def test_frequencies_concentrate(self):
        S = abstract_domain(1000)
        counts = Counter(sample(FiniteDistribution.uniform(S), 100_000, seed=7))
        # 3σ de una binomial(10^5, 1/1000) es ≈ 30
        assert all(abs(counts.get(i, 0) - 100) <= 60 for i in range(1000))

    def test_labelled_sample_carries_labels(self, line4, uniform_line4):
        f = Labelling.from_string(line4, "1100")
        for point, label in labelled_sample(uniform_line4, f, 20, seed=3):
            assert label == f[point]
