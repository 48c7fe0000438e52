"""
Decision trees over bit vectors and over the real line.

`build_boolean_tree` is the constructive splitting used to show that any k
distinct points are shattered by trees with at most k leaves.
`min_tree_size_bruteforce` is the exact oracle behind BooleanDecisionTree
consistency: smallest number of internal nodes, within a hard budget.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from app.utils.constants import MAX_TREE_SEARCH_POINTS, MAX_TREE_SEARCH_STATES
from app.utils.error_handler import BudgetExceededError, DegenerateInputError
from app.utils.logger_config import get_logger

logger = get_logger()

BitVector = Tuple[int, ...]


@dataclass(frozen=True)
class TreeNode:
    """
    Internal node when `coordinate` is set, leaf otherwise.

    Boolean nodes send x[coordinate] == 0 left. Real nodes (threshold set)
    send x[coordinate] < threshold left.
    """
    coordinate: Optional[int] = None
    threshold: Optional[Fraction] = None
    label: Optional[int] = None
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.coordinate is None

    def evaluate(self, x: Sequence) -> int:
        node = self
        while not node.is_leaf:
            value = x[node.coordinate]
            if node.threshold is None:
                node = node.left if value == 0 else node.right
            else:
                node = node.left if value < node.threshold else node.right
        return node.label


def leaf(label: int) -> TreeNode:
    return TreeNode(label=int(label))


@dataclass(frozen=True)
class DecisionTree:
    root: TreeNode
    size_bound: Optional[int] = None

    def __post_init__(self):
        if self.size_bound is not None and self.node_count > self.size_bound:
            raise DegenerateInputError(
                f"tree has {self.node_count} nodes, above its declared bound {self.size_bound}")
        if self.is_boolean and not self._paths_distinct(self.root, frozenset()):
            raise DegenerateInputError("a root-to-leaf path queries the same coordinate twice")

    @property
    def is_boolean(self) -> bool:
        return all(n.threshold is None for n in self._internal_nodes())

    def _internal_nodes(self) -> List[TreeNode]:
        out, stack = [], [self.root]
        while stack:
            node = stack.pop()
            if not node.is_leaf:
                out.append(node)
                stack.extend((node.left, node.right))
        return out

    def _paths_distinct(self, node: TreeNode, seen: frozenset) -> bool:
        if node.is_leaf:
            return True
        if node.coordinate in seen:
            return False
        seen = seen | {node.coordinate}
        return self._paths_distinct(node.left, seen) and self._paths_distinct(node.right, seen)

    @property
    def node_count(self) -> int:
        return len(self._internal_nodes())

    @property
    def leaf_count(self) -> int:
        return self.node_count + 1

    def evaluate(self, x: Sequence) -> int:
        return self.root.evaluate(x)

    def consistent_with(self, points: Sequence[Sequence], labels: Sequence[int]) -> bool:
        return all(self.evaluate(p) == l for p, l in zip(points, labels))


def build_boolean_tree(points: Sequence[BitVector], labels: Sequence[int]) -> DecisionTree:
    """
    Split on the first coordinate that separates the current set into two
    nonempty parts and recurse; stop at label-pure sets.

    Every leaf keeps at least one point, so the tree has at most |points| leaves.
    """
    points = [tuple(p) for p in points]
    if len(set(points)) != len(points):
        raise DegenerateInputError("build_boolean_tree needs distinct points")
    if not points:
        return DecisionTree(leaf(0))

    def grow(items: List[Tuple[BitVector, int]]) -> TreeNode:
        values = {l for _, l in items}
        if len(values) == 1:
            return leaf(values.pop())
        n = len(items[0][0])
        for i in range(n):
            zeros = [it for it in items if it[0][i] == 0]
            ones = [it for it in items if it[0][i] == 1]
            if zeros and ones:
                return TreeNode(coordinate=i, left=grow(zeros), right=grow(ones))
        raise DegenerateInputError("distinct points must differ in some coordinate")

    root = grow(list(zip(points, (int(l) for l in labels))))
    return DecisionTree(root, size_bound=max(len(points) - 1, 0))


def min_tree_size_bruteforce(points: Sequence[BitVector], labels: Sequence[int],
                             size_budget: int) -> Optional[int]:
    """
    Smallest internal-node count of a Boolean tree consistent with the labels.

    Args:
        points: distinct bit vectors
        labels: 0/1 per point
        size_budget: largest node count of interest

    Returns:
        The minimum node count if it is ≤ size_budget, else None.

    Raises:
        BudgetExceededError: too many points, or the memoized search outgrows
            MAX_TREE_SEARCH_STATES.
    """
    points = [tuple(p) for p in points]
    m = len(points)
    if m > MAX_TREE_SEARCH_POINTS:
        raise BudgetExceededError("tree search points", m, MAX_TREE_SEARCH_POINTS)
    if size_budget < 0:
        return None
    if m == 0:
        return 0
    n = len(points[0])
    if n * max(size_budget, 1) > MAX_TREE_SEARCH_STATES:
        raise BudgetExceededError("tree search nodes x coordinates", n * size_budget, MAX_TREE_SEARCH_STATES)

    full = (1 << m) - 1
    ones_by_coord = [sum(1 << j for j, p in enumerate(points) if p[i]) for i in range(n)]
    positive = sum(1 << j for j, l in enumerate(labels) if l)
    cap = size_budget + 1
    memo: Dict[int, int] = {}

    def best(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        pos = mask & positive
        if pos == 0 or pos == mask:
            memo[mask] = 0
            return 0
        if len(memo) >= MAX_TREE_SEARCH_STATES:
            raise BudgetExceededError("tree search states", len(memo), MAX_TREE_SEARCH_STATES)
        result = cap
        for ones in ones_by_coord:
            right = mask & ones
            left = mask & ~ones
            if not right or not left:
                continue
            cost_left = best(left)
            if 1 + cost_left >= result:
                continue
            total = 1 + cost_left + best(right)
            if total < result:
                result = total
                if result == 1:
                    break
        result = min(result, cap)
        memo[mask] = result
        return result

    value = best(full)
    return value if value <= size_budget else None


def real_chain_tree(xs: Sequence, labels: Sequence[int], coordinate: int = 0) -> DecisionTree:
    """
    A chain of threshold nodes realizing a labelling of sorted reals with one
    node per alternation.
    """
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    seq = [int(labels[i]) for i in order]
    cuts = []
    for a, b in zip(order, order[1:]):
        if labels[a] != labels[b]:
            cuts.append((Fraction(xs[a]) + Fraction(xs[b])) / 2)
    if not seq:
        return DecisionTree(leaf(0))
    # build from the right: region after the last cut carries the final label
    node = leaf(seq[-1])
    current = seq[-1]
    for cut in reversed(cuts):
        current = 1 - current
        node = TreeNode(coordinate=coordinate, threshold=cut, left=leaf(current), right=node)
    return DecisionTree(node, size_bound=len(cuts))
