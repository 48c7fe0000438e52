#!/usr/bin/env python3
"""
Pruebas de árboles de decisión: construcción, búsqueda exacta y cadenas reales.
"""
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from app.core import full_cube_domain
from app.trees import DecisionTree, TreeNode, build_boolean_tree, leaf, min_tree_size_bruteforce, real_chain_tree
from app.utils.error_handler import BudgetExceededError, DegenerateInputError

CUBE3 = full_cube_domain(3).points


class TestBuildBooleanTree:
    """Árbol constructivo con a lo sumo |puntos| hojas"""

    def test_single_point(self):
        tree = build_boolean_tree([(0, 1)], [1])
        assert tree.node_count == 0
        assert tree.leaf_count == 1
        assert tree.evaluate((0, 1)) == 1

    def test_three_points_every_labelling(self):
        points = [(0, 0, 0), (0, 1, 1), (1, 0, 1)]
        for labels in product((0, 1), repeat=3):
            tree = build_boolean_tree(points, labels)
            assert tree.consistent_with(points, labels)
            assert tree.leaf_count <= 3

    def test_minimal_split(self):
        tree = build_boolean_tree([(0, 0), (1, 0)], [0, 1])
        assert tree.node_count == 1
        assert tree.root.coordinate == 0

    def test_duplicates_rejected(self):
        with pytest.raises(DegenerateInputError):
            build_boolean_tree([(0, 1), (0, 1)], [0, 1])


class TestMinTreeSize:
    """Búsqueda exacta del menor árbol consistente"""

    def test_constant_labels(self):
        assert min_tree_size_bruteforce(CUBE3, [1] * 8, 5) == 0

    def test_parity_needs_complete_tree(self):
        parity = [sum(p) % 2 for p in CUBE3]
        assert min_tree_size_bruteforce(CUBE3, parity, 10) == 7
        assert min_tree_size_bruteforce(CUBE3, parity, 6) is None

    def test_single_coordinate(self):
        assert min_tree_size_bruteforce(CUBE3, [p[2] for p in CUBE3], 3) == 1

    def test_point_budget(self):
        points = full_cube_domain(5).points[:17]
        with pytest.raises(BudgetExceededError):
            min_tree_size_bruteforce(points, [0] * 17, 4)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 7), min_size=1, max_size=8, unique=True), st.data())
    def test_constructive_tree_dominates_minimum(self, indices, data):
        points = [CUBE3[i] for i in indices]
        labels = data.draw(st.lists(st.integers(0, 1), min_size=len(points), max_size=len(points)))
        built = build_boolean_tree(points, labels)
        best = min_tree_size_bruteforce(points, labels, len(points))
        assert best is not None
        assert built.node_count >= best


class TestDecisionTree:
    """Invariantes de la estructura"""

    def test_repeated_coordinate_on_path(self):
        inner = TreeNode(coordinate=0, left=leaf(0), right=leaf(1))
        with pytest.raises(DegenerateInputError):
            DecisionTree(TreeNode(coordinate=0, left=inner, right=leaf(1)))

    def test_size_bound(self):
        root = TreeNode(coordinate=0, left=leaf(0), right=TreeNode(coordinate=1, left=leaf(0), right=leaf(1)))
        with pytest.raises(DegenerateInputError):
            DecisionTree(root, size_bound=1)

    def test_real_chain_tree(self):
        xs = [1, 2, 3, 4]
        labels = [0, 1, 1, 0]
        tree = real_chain_tree(xs, labels)
        assert tree.node_count == 2
        assert not tree.is_boolean
        assert tree.consistent_with([(x,) for x in xs], labels)
