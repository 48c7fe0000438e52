#!/usr/bin/env python3
"""
Pruebas de geometría exacta: factibilidad lineal, rango, determinantes y bola mínima.
"""
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from app.utils.error_handler import DegenerateInputError
from app.utils.geometry.enclosing_ball import enclosing_radius, min_enclosing_ball
from app.utils.geometry.feasibility import find_feasible_point, find_strict_point, is_feasible
from app.utils.geometry.linalg import determinant, exact_rank, fraction_rank, modular_rank


def _smallest_circle_radius(X):
    """Círculo mínimo en el plano: el menor círculo válido por 2 o 3 puntos de frontera."""
    if len(X) == 1:
        return 0.0
    candidates = []
    for a, b in combinations(X, 2):
        candidates.append(((a + b) / 2, np.linalg.norm(a - b) / 2))
    for a, b, c in combinations(X, 3):
        d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
        if abs(d) < 1e-12:
            continue
        sa, sb, sc = a @ a, b @ b, c @ c
        ux = (sa * (b[1] - c[1]) + sb * (c[1] - a[1]) + sc * (a[1] - b[1])) / d
        uy = (sa * (c[0] - b[0]) + sb * (a[0] - c[0]) + sc * (b[0] - a[0])) / d
        center = np.array([ux, uy])
        candidates.append((center, np.linalg.norm(a - center)))
    valid = [r for center, r in candidates if np.all(np.linalg.norm(X - center, axis=1) <= r + 1e-9)]
    return min(valid)


class TestFeasibility:
    """Simplex exacto sobre Fraction"""

    def test_interval_feasible(self):
        point = find_feasible_point([(1,), (-1,)], [1, -3], 1)
        assert point is not None
        assert 1 <= point[0] <= 3
        assert all(isinstance(v, Fraction) for v in point)

    def test_empty_interval(self):
        assert not is_feasible([(1,), (-1,)], [2, -1], 1)

    def test_two_dimensional(self):
        rows = [(1, 1), (1, -1), (-1, 0)]
        rhs = [2, 0, -5]
        point = find_feasible_point(rows, rhs, 2)
        assert point is not None
        for row, b in zip(rows, rhs):
            assert sum(a * v for a, v in zip(row, point)) >= b

    def test_strict_system(self):
        assert find_strict_point([(1,), (-1,)], [0, 0], 1) is None
        point = find_strict_point([(1,)], [0], 1)
        assert point[0] > 0


class TestLinalg:
    """Rango y determinante exactos"""

    def test_rank_deficient(self):
        assert fraction_rank([[1, 2], [2, 4]]) == 1
        assert exact_rank([[1, 2], [2, 4]]) == 1

    def test_identity(self):
        eye = [[int(i == j) for j in range(3)] for i in range(3)]
        assert exact_rank(eye) == 3
        assert modular_rank(eye) == 3

    def test_determinant(self):
        assert determinant([[1, 2], [3, 4]]) == -2
        assert determinant([[1, 2], [2, 4]]) == 0

    def test_modular_rank_is_lower_bound(self):
        rng = np.random.default_rng(3)
        rows = (1 - 2 * rng.integers(0, 2, size=(6, 6))).tolist()
        assert modular_rank(rows) <= fraction_rank(rows)


class TestEnclosingBall:
    """Bola mínima envolvente"""

    def test_single_point(self):
        center, radius = min_enclosing_ball([(1.0, 2.0)])
        assert radius == 0.0
        assert center.tolist() == [1.0, 2.0]

    def test_two_points(self):
        center, radius = min_enclosing_ball([(0, 0), (2, 0)])
        assert radius == pytest.approx(1.0)
        assert center == pytest.approx([1.0, 0.0])

    def test_right_triangle(self):
        assert enclosing_radius([(0, 0), (2, 0), (1, 1)]) == pytest.approx(1.0)

    def test_obtuse_triangle_uses_diameter(self):
        center, radius = min_enclosing_ball([(0, 0), (4, 0), (2, 1)])
        assert radius == pytest.approx(2.0)
        assert center == pytest.approx([2.0, 0.0])

    def test_empty(self):
        with pytest.raises(DegenerateInputError):
            min_enclosing_ball([])

    def test_sphere_points_in_high_dimension(self):
        rng = np.random.default_rng(11)
        g = rng.standard_normal((60, 30))
        points = g / np.linalg.norm(g, axis=1, keepdims=True)
        assert enclosing_radius(points) <= 1.0 + 1e-9

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=9, unique=True))
    def test_matches_smallest_circle_by_enumeration(self, pts):
        X = np.asarray(pts, dtype=float)
        center, radius = min_enclosing_ball(X)
        assert np.all(np.linalg.norm(X - center, axis=1) <= radius + 1e-7)
        assert radius == pytest.approx(_smallest_circle_radius(X), abs=1e-6)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10_000), st.integers(2, 12), st.integers(1, 4))
    def test_radius_invariant_under_rigid_motions(self, seed, m, d):
        rng = np.random.default_rng(seed)
        X = rng.standard_normal((m, d)) * 3
        Q, _ = np.linalg.qr(rng.standard_normal((d, d)))
        shift = rng.uniform(-10, 10, size=d)
        _, radius = min_enclosing_ball(X)
        _, moved = min_enclosing_ball(X @ Q.T + shift)
        assert moved == pytest.approx(radius, abs=1e-8)
