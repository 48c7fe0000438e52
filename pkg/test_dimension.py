#!/usr/bin/env python3
"""
Pruebas de pulverización, dimensión VC / LVC, función de crecimiento y clasificación extremal.
"""
import pytest
from hypothesis import given, settings, strategies as st

from app.classes import (
    ExplicitClass, Halfspace, HalfspaceIntersection, HyperplaneArrangement, IntervalUnion, Monotone, Poset,
    SymmetricThreshold, moment_curve_embed, parity_class,
)
from app.core import FiniteDomain, abstract_domain, real_line_domain, real_space_domain
from app.dimension import (
    classify_extremal, consistent_labellings, growth_and_shattering, is_shattered, lvc_dim,
    lvc_dim_with_certificate, sauer_bound, vc_dim, vc_dim_with_certificate,
)
from app.hardness import general_position_set
from app.utils.config.settings import ENV_ORACLE_CALL_BUDGET
from app.utils.error_handler import BudgetExceededError


def _poset_domain(n):
    return FiniteDomain(tuple(range(n)), "poset")


class TestShattering:
    """is_shattered sobre ejemplos conocidos"""

    def test_empty_set(self):
        assert is_shattered(Halfspace(2), [])

    def test_halfspace_n_plus_two(self):
        assert not is_shattered(Halfspace(2), general_position_set(2, 4).points)
        assert is_shattered(Halfspace(2), general_position_set(2, 3).points)

    def test_two_intervals_four_points(self):
        assert is_shattered(IntervalUnion(2), real_line_domain([1, 5, 7, 11]).points)


class TestDimensions:
    """vc_dim y lvc_dim"""

    def test_intervals_vc(self):
        assert vc_dim(IntervalUnion(2), real_line_domain(range(1, 11))) == 4

    def test_halfspace_plane_vc(self):
        assert vc_dim(Halfspace(2), general_position_set(2, 6)) == 3

    def test_symmetric_vc(self):
        assert vc_dim(SymmetricThreshold(10, 2), abstract_domain(10)) == 2

    def test_colinear_points_in_space(self):
        S = real_space_domain([(x, 0, 0) for x in range(1, 9)])
        assert lvc_dim(Halfspace(3), S) == 2

    def test_antichain(self):
        assert lvc_dim(Monotone(Poset.antichain(6)), _poset_domain(6)) == 6

    def test_intersection_on_moment_curve(self):
        S = real_space_domain(moment_curve_embed(x, 2) for x in range(1, 10))
        assert lvc_dim(HalfspaceIntersection(2, 2), S) == 5
        assert vc_dim(HalfspaceIntersection(2, 2), S) == 5

    def test_single_intersection_is_a_halfspace(self):
        S = real_space_domain(moment_curve_embed(x, 2) for x in range(1, 8))
        C = HalfspaceIntersection(2, 1)
        assert consistent_labellings(C, S) == consistent_labellings(Halfspace(2), S)
        assert vc_dim(C, S) == vc_dim(Halfspace(2), S) == 3

    def test_lvc_below_vc(self):
        C = Monotone(Poset.from_pairs(3, [(0, 1)]))
        S = _poset_domain(3)
        assert vc_dim(C, S) == 2
        lvc, certificate = lvc_dim_with_certificate(C, S)
        assert lvc == 1
        assert certificate.subset == (0, 1)
        assert certificate.labelling == (1, 0)

    def test_vc_certificate(self):
        S = real_line_domain([1, 2, 3, 4])
        vc, certificate = vc_dim_with_certificate(IntervalUnion(1), S)
        assert vc == 2
        assert certificate.subset == S.points[:3]
        assert certificate.labelling == (1, 0, 1)

    def test_oracle_budget(self, monkeypatch):
        monkeypatch.setenv(ENV_ORACLE_CALL_BUDGET, "5")
        with pytest.raises(BudgetExceededError):
            vc_dim(IntervalUnion(2), real_line_domain(range(1, 11)))


class TestGrowth:
    """Función de crecimiento y número de pulverización"""

    def test_symmetric_growth(self):
        growth, _ = growth_and_shattering(SymmetricThreshold(5, 1), abstract_domain(5))
        assert growth == 6

    def test_empty_domain(self):
        assert growth_and_shattering(IntervalUnion(1), real_line_domain([])) == (1, 1)

    def test_single_interval(self):
        assert growth_and_shattering(IntervalUnion(1), real_line_domain([1, 2, 3, 4])) == (11, 11)

    def test_sauer_bound(self):
        assert sauer_bound(4, 2) == 11
        assert sauer_bound(10, 0) == 1


class TestClassifyExtremal:
    """Clases máximas y extremales"""

    def test_symmetric_is_maximum(self):
        report = classify_extremal(SymmetricThreshold(10, 2), abstract_domain(10))
        assert report.is_maximum
        assert report.vc == report.lvc == 2

    def test_singleton_class(self):
        report = classify_extremal(parity_class(2), abstract_domain(4))
        assert report.growth == 1
        assert report.vc == 0
        assert report.is_maximum

    def test_line_arrangement_is_maximum(self):
        C = HyperplaneArrangement.random(2, 6, seed=5)
        report = classify_extremal(C, abstract_domain(6))
        assert report.is_maximum
        assert report.vc == 2

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 12), st.integers(0, 10_000))
    def test_invariants_on_random_classes(self, n, size, seed):
        C = ExplicitClass.random(n, size, seed)
        S = abstract_domain(n)
        report = classify_extremal(C, S)
        assert report.vc == vc_dim(C, S)
        assert report.lvc == lvc_dim(C, S)
        sub = abstract_domain(max(n - 1, 0))
        assert vc_dim(C, sub) <= report.vc


class TestNestedSubsets:
    """Para T ⊆ S: vc(T) ≤ vc(S) y lvc(T) ≥ min(lvc(S), |T|)"""

    @staticmethod
    def _check(C, S, mask):
        T = FiniteDomain(tuple(p for p, keep in zip(S.points, mask) if keep), S.kind)
        assert vc_dim(C, T) <= vc_dim(C, S)
        assert lvc_dim(C, T) >= min(lvc_dim(C, S), len(T))

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.booleans(), min_size=8, max_size=8), st.integers(1, 2))
    def test_intervals(self, mask, k):
        self._check(IntervalUnion(k), real_line_domain(range(1, 9)), mask)

    @settings(max_examples=15, deadline=None)
    @given(st.lists(st.booleans(), min_size=6, max_size=6))
    def test_halfspaces(self, mask):
        self._check(Halfspace(2), general_position_set(2, 6), mask)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.booleans(), min_size=5, max_size=5), st.integers(1, 32), st.integers(0, 10_000))
    def test_explicit_classes(self, mask, size, seed):
        self._check(ExplicitClass.random(5, size, seed), abstract_domain(5), mask)
