#!/usr/bin/env python3
"""
Pruebas de la distancia exacta a una clase y del experimento de lejanía.
"""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from app.classes import (
    Alternating, Halfspace, HalfspaceIntersection, IntervalUnion, Junta, Monotone, Poset, SymmetricThreshold,
    consistent, moment_curve_embed,
)
from app.core import (
    FiniteDistribution, FiniteDomain, Labelling, abstract_domain, cube_domain, dist_between, full_cube_domain,
    normalize, real_line_domain, real_space_domain,
)
from app.distance import (
    METHOD_GENERIC, exact_distance, farness_exponent, farness_union_bound, min_far_multiplier,
    random_far_fraction,
)
from app.utils.error_handler import DomainMismatchError, UnsupportedDomainError

weights_strategy = st.lists(st.integers(0, 5), min_size=6, max_size=6).filter(any)
labels_strategy = st.lists(st.integers(0, 1), min_size=6, max_size=6)


class TestExactDistance:
    """Ejemplos calculados a mano"""

    def test_member_is_at_distance_zero(self, line4, uniform_line4):
        f = Labelling.from_string(line4, "0110")
        assert exact_distance(f, IntervalUnion(1), uniform_line4) == 0

    def test_symmetric_all_ones(self, range5):
        D = FiniteDistribution.uniform(range5)
        f = Labelling.constant(range5, 1)
        C = SymmetricThreshold(5, 1)
        assert exact_distance(f, C, D) == Fraction(4, 5)
        assert exact_distance(f, C, D, method=METHOD_GENERIC) == Fraction(4, 5)

    def test_single_interval(self, line4, uniform_line4):
        f = Labelling.from_string(line4, "1010")
        assert exact_distance(f, IntervalUnion(1), uniform_line4) == Fraction(1, 4)
        assert exact_distance(f, IntervalUnion(1), uniform_line4, method=METHOD_GENERIC) == Fraction(1, 4)

    def test_zero_weight_points_are_ignored(self, line4):
        D = FiniteDistribution.uniform(line4, line4.points[:2])
        f = Labelling.from_string(line4, "1010")
        assert exact_distance(f, IntervalUnion(1), D) == 0

    def test_float_weights(self, line4):
        D = normalize([0.1, 0.2, 0.3, 0.4], line4)
        f = Labelling.from_string(line4, "1010")
        assert exact_distance(f, IntervalUnion(1), D) == pytest.approx(0.1)

    def test_domain_mismatch(self, line4):
        f = Labelling.constant(line4, 0)
        with pytest.raises(DomainMismatchError):
            exact_distance(f, IntervalUnion(1), FiniteDistribution.uniform(abstract_domain(4)))

    def test_intersection_off_curve(self):
        S = real_space_domain([(1, 1), (2, 2)])
        with pytest.raises(UnsupportedDomainError):
            exact_distance(Labelling(S, (1, 0)), HalfspaceIntersection(2, 1), FiniteDistribution.uniform(S))


class TestSpecializedPathsAgree:
    """Los caminos especializados coinciden con la enumeración genérica"""

    @settings(max_examples=40, deadline=None)
    @given(labels_strategy, weights_strategy, st.integers(1, 2))
    def test_line_classes(self, labels, raw, k):
        S = real_line_domain([3, 1, 4, 10, 5, 9])
        D = normalize(raw, S)
        f = Labelling(S, tuple(labels))
        for C in (IntervalUnion(k), Alternating(k)):
            assert exact_distance(f, C, D) == exact_distance(f, C, D, method=METHOD_GENERIC)

    @settings(max_examples=15, deadline=None)
    @given(labels_strategy, weights_strategy)
    def test_halfspace_on_moment_curve(self, labels, raw):
        S = real_space_domain(moment_curve_embed(x, 2) for x in range(1, 7))
        D = normalize(raw, S)
        f = Labelling(S, tuple(labels))
        C = Halfspace(2)
        assert exact_distance(f, C, D) == exact_distance(f, C, D, method=METHOD_GENERIC)

    @settings(max_examples=30, deadline=None)
    @given(labels_strategy, weights_strategy, st.integers(0, 2))
    def test_junta(self, labels, raw, k):
        S = cube_domain(full_cube_domain(3).points[:6])
        D = normalize(raw, S)
        f = Labelling(S, tuple(labels))
        C = Junta(3, k)
        assert exact_distance(f, C, D) == exact_distance(f, C, D, method=METHOD_GENERIC)

    @settings(max_examples=30, deadline=None)
    @given(labels_strategy, weights_strategy, st.integers(0, 1000))
    def test_monotone(self, labels, raw, seed):
        P = Poset.random(6, 0.4, seed)
        S = FiniteDomain(tuple(range(6)), "poset")
        D = normalize(raw, S)
        f = Labelling(S, tuple(labels))
        C = Monotone(P)
        distance = exact_distance(f, C, D)
        assert distance == exact_distance(f, C, D, method=METHOD_GENERIC)
        supported = [p for p in D.support]
        assert (distance == 0) == consistent(C, supported, f.restrict(supported))


class TestUpperBoundWitnesses:
    """La distancia exacta no supera la de un miembro construido a mano"""

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(0, 1), min_size=10, max_size=10),
           st.lists(st.integers(0, 5), min_size=10, max_size=10).filter(any))
    def test_constants_and_prefix_interval(self, labels, raw):
        S = real_line_domain(range(1, 11))
        D = normalize(raw, S)
        f = Labelling(S, tuple(labels))
        distance = exact_distance(f, IntervalUnion(1), D)
        for h in (Labelling.constant(S, 0), Labelling.constant(S, 1), Labelling.from_string(S, "1111100000")):
            assert distance <= dist_between(f, h, D)


class TestFarness:
    """Fracción de etiquetados aleatorios lejos de la clase"""

    def test_single_point_is_never_far(self):
        report = random_far_fraction(IntervalUnion(1), real_line_domain([1]), 0.5, trials=20, seed=1)
        assert report.far_count == 0
        assert report.ci_low == pytest.approx(0.0, abs=1e-12)

    def test_far_fraction_grows_with_set_size(self):
        C = IntervalUnion(2)
        small = random_far_fraction(C, real_line_domain(range(1, 9)), 0.05, trials=500, seed=3)
        large = random_far_fraction(C, real_line_domain(range(1, 17)), 0.05, trials=500, seed=3)
        assert large.far_fraction >= 0.9
        assert small.far_fraction <= large.far_fraction

    def test_union_bound(self):
        assert farness_union_bound(2, 200, 0.05) < 1e-6
        assert farness_union_bound(4, 4, 0.1) == pytest.approx(1.0)

    def test_exponent_and_multiplier(self):
        assert farness_exponent(8, 0.01) < 0
        K = min_far_multiplier()
        assert 3.0 < K < 3.1
        assert K * math.log(2) > 1 + math.log(K)
