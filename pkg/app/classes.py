"""
Function classes exposed through consistency oracles.

A class answers one question: given distinct labelled points, does some
member agree with every label? Each class documents the point shape it
accepts; anything else raises DomainMismatchError, and the two restricted
classes (HalfspaceIntersection, RealDecisionTree) raise
UnsupportedDomainError outside their analysed domains.

Spec strings (CLI): `kind:key=value,...`
    intervals:k=3            alternating:m=4
    halfspace:n=4            halfspace-intersection:n=2,k=2
    ptf:n=5,k=2,domain=cube  real-tree:n=3,k=2
    bool-tree:n=4,k=3        junta:n=8,k=2
    monotone:poset=@file     monotone:chain=8 / monotone:antichain=6
    symmetric:n=10[,t=2]     arrangement:d=2,lines=6,seed=3
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, prod
from numbers import Rational
from typing import ClassVar, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from tenacity import retry, retry_if_exception_type, stop_after_attempt

from app.trees import min_tree_size_bruteforce
from app.utils.constants import DEFAULT_REGENERATION_ATTEMPTS, MAX_JUNTA_SUBSETS, SYMMETRIC_FRACTION
from app.utils.error_handler import (
    BudgetExceededError, DegenerateInputError, DegenerateSampleError, DomainMismatchError,
    SpecParseError, UnsupportedDomainError,
)
from app.utils.geometry.feasibility import find_feasible_point, find_strict_point
from app.utils.geometry.linalg import determinant
from app.utils.metrics import ORACLE_CALLS
from app.utils.rng import make_rng

Labels = Sequence[int]


# ========== EMBEDDINGS ==========

def moment_curve_embed(x, n: int) -> Tuple[Fraction, ...]:
    """(x, x², …, xⁿ) for even n, (0, x, …, x^{n−1}) for odd n; exact."""
    x = Fraction(x)
    if n % 2 == 0:
        return tuple(x ** i for i in range(1, n + 1))
    return (Fraction(0),) + tuple(x ** i for i in range(1, n))


def standard_moment_curve(x, n: int) -> Tuple[Fraction, ...]:
    """(x, x², …, xⁿ) for every n."""
    x = Fraction(x)
    return tuple(x ** i for i in range(1, n + 1))


def moment_curve_preimage(points: Sequence[Sequence], n: int) -> Optional[List[Fraction]]:
    """Parameters x with points[i] == moment_curve_embed(x, n), or None if some point is off the curve."""
    offset = 0 if n % 2 == 0 else 1
    xs = []
    for p in points:
        if len(p) != n or (n == 1 and offset):
            return None
        x = p[offset]
        if _is_exact(x):
            if tuple(p) != moment_curve_embed(x, n):
                return None
        elif not _close_to_curve(p, x, n):
            return None
        xs.append(x)
    return xs


def standard_curve_preimage(points: Sequence[Sequence]) -> Optional[List]:
    """Parameters x with points[i] == (x, x², …, x^d), or None."""
    xs = []
    for p in points:
        x = p[0]
        for i, c in enumerate(p):
            if c != x ** (i + 1):
                return None
        xs.append(x)
    return xs


def _is_exact(v) -> bool:
    return isinstance(v, Rational)


def _close_to_curve(p, x, n) -> bool:
    return all(abs(a - b) <= 1e-9 * max(1.0, abs(b)) for a, b in zip(p, moment_curve_embed(Fraction(x), n)))


def monomial_index(n: int, k: int) -> List[Tuple[int, ...]]:
    """Multilinear monomials of degree ≤ k as coordinate tuples, degree-lexicographic."""
    out: List[Tuple[int, ...]] = []
    for degree in range(0, min(k, n) + 1):
        out.extend(combinations(range(n), degree))
    return out


def monomial_embed(x: Sequence[int], k: int) -> Tuple[int, ...]:
    """
    ψ_k(x) = (x^a)_{|a| ≤ k} for x ∈ {±1}ⁿ.

    Order: ∅, then degree 1 by coordinate, then degree 2 pairs in
    lexicographic order, and so on. For n=2, k=2: ∅, x1, x2, x1·x2.
    """
    if any(v not in (1, -1) for v in x):
        raise DegenerateInputError(f"monomial_embed expects ±1 coordinates, got {tuple(x)}")
    return tuple(prod((x[i] for i in a), start=1) for a in monomial_index(len(x), k))


def real_monomial_embed(x: Sequence, k: int) -> Tuple:
    """All monomials of degree ≤ k (repetition allowed), degree-lexicographic."""
    n = len(x)
    out = []
    for degree in range(0, k + 1):
        for a in combinations_with_replacement(range(n), degree):
            out.append(prod((x[i] for i in a), start=Fraction(1)))
    return tuple(out)


def bits_to_signs(bits: Sequence[int]) -> Tuple[int, ...]:
    """0 ↦ +1, 1 ↦ −1."""
    return tuple(1 - 2 * int(b) for b in bits)


def alternation_count(labels_along_line: Sequence[int]) -> int:
    """Number of adjacent unequal pairs."""
    seq = list(labels_along_line)
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def block_count(labels_along_line: Sequence[int]) -> int:
    """Number of maximal runs of 1s."""
    seq = list(labels_along_line)
    return sum(1 for i, v in enumerate(seq) if v == 1 and (i == 0 or seq[i - 1] == 0))


def line_parameters(points: Sequence[Sequence]) -> List:
    """
    Positions of colinear points along their common line.

    Raises:
        UnsupportedDomainError: if the points are not colinear.
    """
    if not points:
        return []
    base = points[0]
    direction = next((tuple(a - b for a, b in zip(p, base)) for p in points if tuple(p) != tuple(base)), None)
    if direction is None:
        return [0 for _ in points]
    norm2 = sum(d * d for d in direction)
    params = []
    for p in points:
        diff = [a - b for a, b in zip(p, base)]
        t = sum(d * e for d, e in zip(diff, direction)) / norm2
        for d, e in zip(diff, direction):
            if not _approx_equal(d, t * e):
                raise UnsupportedDomainError("points are not colinear")
        params.append(t)
    return params


def axis_parameters(points: Sequence[Sequence]) -> Tuple[Optional[int], List]:
    """The single varying coordinate of an axis-colinear set and its values."""
    if not points:
        return None, []
    n = len(points[0])
    varying = [i for i in range(n) if len({p[i] for p in points}) > 1]
    if len(varying) > 1:
        raise UnsupportedDomainError(
            f"points vary in coordinates {varying}; only axis-colinear sets are supported")
    if not varying:
        return None, [0 for _ in points]
    i = varying[0]
    return i, [p[i] for p in points]


def _approx_equal(a, b) -> bool:
    if _is_exact(a) and _is_exact(b):
        return a == b
    return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


def sorted_labels(params: Sequence, labels: Labels) -> List[int]:
    order = sorted(range(len(params)), key=lambda i: params[i])
    return [int(labels[i]) for i in order]


# ========== SEPARABILIDAD LINEAL ==========

def linear_separability(points: Sequence[Sequence], labels: Labels) -> bool:
    """
    Feasibility of ℓ(x)·(w₀ + Σ wᵢxᵢ) ≥ 1 with ℓ ∈ {−1, +1}, decided exactly.
    """
    if not points:
        return True
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise DomainMismatchError("linear_separability: points of mixed dimension")
    rows, rhs = [], []
    for p, label in zip(points, labels):
        sign = 1 if label else -1
        rows.append((Fraction(sign),) + tuple(sign * Fraction(c) for c in p))
        rhs.append(Fraction(1))
    return find_feasible_point(rows, rhs, dim + 1) is not None


# ========== POSETS ==========

@dataclass(frozen=True)
class Poset:
    """
    Strict partial order on {0, …, n−1}. `relation` holds the transitive
    closure. A bipartite order keeps its parts; all its pairs go X → Y.
    """
    n: int
    relation: FrozenSet[Tuple[int, int]]
    parts: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    _up: Dict[int, FrozenSet[int]] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        closed = _transitive_closure(self.n, self.relation)
        for a, b in closed:
            if a == b:
                raise DegenerateInputError(f"relation is not irreflexive/acyclic at {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise DegenerateInputError(f"pair ({a},{b}) out of range for n={self.n}")
        if self.parts is not None:
            xs, ys = set(self.parts[0]), set(self.parts[1])
            if any(a not in xs or b not in ys for a, b in closed):
                raise DegenerateInputError("bipartite order has an edge not going X → Y")
        up: Dict[int, set] = {i: set() for i in range(self.n)}
        for a, b in closed:
            up[a].add(b)
        object.__setattr__(self, "relation", frozenset(closed))
        object.__setattr__(self, "_up", {i: frozenset(s) for i, s in up.items()})

    def less(self, a: int, b: int) -> bool:
        return b in self._up[a]

    def above(self, a: int) -> FrozenSet[int]:
        return self._up[a]

    def is_antichain(self, elements: Iterable[int]) -> bool:
        elements = list(elements)
        return not any(self.less(a, b) or self.less(b, a) for a, b in combinations(elements, 2))

    def is_monotone(self, labels: Sequence[int], elements: Optional[Sequence[int]] = None) -> bool:
        elements = range(self.n) if elements is None else elements
        return first_violation(self, list(elements), [labels[e] for e in elements]) is None

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "Poset":
        return cls(n, frozenset((int(a), int(b)) for a, b in pairs))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, frozenset())

    @classmethod
    def random(cls, n: int, edge_probability: float, seed) -> "Poset":
        """Random order: a random DAG on a random topological order, closed transitively."""
        rng = make_rng(seed)
        order = [int(v) for v in rng.permutation(n)]
        pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < edge_probability]
        return cls.from_pairs(n, pairs)


def _transitive_closure(n: int, pairs: Iterable[Tuple[int, int]]) -> set:
    succ: Dict[int, set] = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    closed = set()
    for start in list(succ):
        stack, seen = list(succ[start]), set()
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            if v == start:
                raise DegenerateInputError(f"relation has a cycle through {start}")
            stack.extend(succ.get(v, ()))
        closed.update((start, v) for v in seen)
    return closed


def load_poset_file(path: str) -> Poset:
    """Line 1: n. Then one `i<j` pair per line, 0-indexed. `#` starts a comment."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise SpecParseError(f"{path}: empty poset file")
    try:
        n = int(lines[0])
        pairs = []
        for ln in lines[1:]:
            a, b = ln.split("<")
            pairs.append((int(a), int(b)))
    except ValueError:
        raise SpecParseError(f"{path}: expected `n` then `i<j` lines")
    return Poset.from_pairs(n, pairs)


def first_violation(poset: Poset, points: Sequence[int], labels: Labels) -> Optional[Tuple[int, int]]:
    """First pair x<y (in input order) with labels (1, 0), or None."""
    ones = [p for p, l in zip(points, labels) if l]
    zeros = [p for p, l in zip(points, labels) if not l]
    for x in ones:
        for y in zeros:
            if poset.less(x, y):
                return x, y
    return None


# ========== CLASES ==========

class FunctionClass(ABC):
    """A family of Boolean functions behind a consistency oracle."""

    kind: ClassVar[str] = "abstract"

    @abstractmethod
    def _consistent(self, points: Sequence, labels: Labels) -> bool:
        ...

    @abstractmethod
    def _check_points(self, points: Sequence) -> None:
        ...

    def params(self) -> Dict[str, object]:
        return {}

    @property
    def spec(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.kind}:{params}" if params else self.kind

    @property
    def params_string(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params().items())


def consistent(C: FunctionClass, points: Sequence, labels: Labels) -> bool:
    """True iff some member of C agrees with `labels` on all `points`."""
    points = list(points)
    labels = [int(l) for l in labels]
    if len(points) != len(labels):
        raise DomainMismatchError(f"{len(points)} points but {len(labels)} labels")
    if not points:
        return True
    if len(set(points)) != len(points):
        raise DegenerateInputError("consistent() needs distinct points")
    C._check_points(points)
    ORACLE_CALLS.labels(class_kind=C.kind).inc()
    return C._consistent(points, labels)


def _require_real(points: Sequence, dim: Optional[int], who: str) -> None:
    for p in points:
        if not isinstance(p, tuple):
            raise DomainMismatchError(f"{who} expects real vectors, got {p!r}")
        if dim is not None and len(p) != dim:
            raise DomainMismatchError(f"{who} expects points in R^{dim}, got length {len(p)}")


def _require_bits(points: Sequence, n: int, who: str) -> None:
    for p in points:
        if not isinstance(p, tuple) or len(p) != n or any(b not in (0, 1) for b in p):
            raise DomainMismatchError(f"{who} expects 0/1 vectors of length {n}, got {p!r}")


def _require_indices(points: Sequence, n: int, who: str) -> None:
    for p in points:
        if not isinstance(p, int) or not 0 <= p < n:
            raise DomainMismatchError(f"{who} expects indices in [0,{n}), got {p!r}")


def _positive(**values) -> None:
    for name, v in values.items():
        if v is None or v < 1:
            raise DegenerateInputError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class IntervalUnion(FunctionClass):
    """Unions of at most k intervals on a line: at most k maximal blocks of 1s."""
    k: int
    kind: ClassVar[str] = "intervals"

    def __post_init__(self):
        _positive(k=self.k)

    def params(self):
        return {"k": self.k}

    def _check_points(self, points):
        _require_real(points, None, "IntervalUnion")

    def _consistent(self, points, labels):
        return block_count(sorted_labels(line_parameters(points), labels)) <= self.k


@dataclass(frozen=True)
class Alternating(FunctionClass):
    """Functions of a line alternating at most m times."""
    m: int
    kind: ClassVar[str] = "alternating"

    def __post_init__(self):
        if self.m < 0:
            raise DegenerateInputError("m must be non-negative")

    def params(self):
        return {"m": self.m}

    def _check_points(self, points):
        _require_real(points, None, "Alternating")

    def _consistent(self, points, labels):
        return alternation_count(sorted_labels(line_parameters(points), labels)) <= self.m


@dataclass(frozen=True)
class Halfspace(FunctionClass):
    n: int
    kind: ClassVar[str] = "halfspace"

    def __post_init__(self):
        _positive(n=self.n)

    def params(self):
        return {"n": self.n}

    def _check_points(self, points):
        _require_real(points, self.n, "Halfspace")

    def _consistent(self, points, labels):
        return linear_separability(points, labels)


@dataclass(frozen=True)
class HalfspaceIntersection(FunctionClass):
    """
    Intersections of k halfspaces, only on moment-curve images ψ_n(x).
    On those sets a member is a labelling with at most m·k alternations,
    m = n for even n and n−1 for odd n.
    """
    n: int
    k: int
    kind: ClassVar[str] = "halfspace-intersection"

    def __post_init__(self):
        _positive(n=self.n, k=self.k)

    def params(self):
        return {"n": self.n, "k": self.k}

    @property
    def alternation_bound(self) -> int:
        degree = self.n if self.n % 2 == 0 else self.n - 1
        return degree * self.k

    def _check_points(self, points):
        _require_real(points, self.n, "HalfspaceIntersection")

    def _consistent(self, points, labels):
        xs = moment_curve_preimage(points, self.n)
        if xs is None:
            raise UnsupportedDomainError(
                "HalfspaceIntersection only supports moment-curve domains; general-position intersection consistency is refused")
        return alternation_count(sorted_labels(xs, labels)) <= self.alternation_bound


@dataclass(frozen=True)
class Ptf(FunctionClass):
    """Degree-k polynomial threshold functions on R^n (`real`) or on the cube (`cube`, 0/1 points)."""
    n: int
    k: int
    domain: str = "real"
    kind: ClassVar[str] = "ptf"

    def __post_init__(self):
        _positive(n=self.n)
        if self.k < 0:
            raise DegenerateInputError("k must be non-negative")
        if self.domain not in ("real", "cube"):
            raise DegenerateInputError(f"ptf domain must be real or cube, got {self.domain!r}")

    def params(self):
        return {"n": self.n, "k": self.k, "domain": self.domain}

    @property
    def embedding_dimension(self) -> int:
        if self.domain == "cube":
            return sum(comb(self.n, i) for i in range(min(self.k, self.n) + 1))
        return comb(self.n + self.k, self.k)

    def embed(self, p) -> Tuple:
        if self.domain == "cube":
            return monomial_embed(bits_to_signs(p), self.k)
        return real_monomial_embed(p, self.k)

    def _check_points(self, points):
        if self.domain == "cube":
            _require_bits(points, self.n, "Ptf[cube]")
        else:
            _require_real(points, self.n, "Ptf[real]")

    def _consistent(self, points, labels):
        return linear_separability([self.embed(p) for p in points], labels)


@dataclass(frozen=True)
class RealDecisionTree(FunctionClass):
    """Size-k threshold trees on R^n, only on axis-colinear sets (at most k alternations)."""
    n: int
    k: int
    kind: ClassVar[str] = "real-tree"

    def __post_init__(self):
        _positive(n=self.n, k=self.k)

    def params(self):
        return {"n": self.n, "k": self.k}

    def _check_points(self, points):
        _require_real(points, self.n, "RealDecisionTree")

    def _consistent(self, points, labels):
        _, values = axis_parameters(points)
        return alternation_count(sorted_labels(values, labels)) <= self.k


@dataclass(frozen=True)
class BooleanDecisionTree(FunctionClass):
    """Decision trees over {0,1}^n with at most k internal nodes, decided by exact search."""
    n: int
    k: int
    kind: ClassVar[str] = "bool-tree"

    def __post_init__(self):
        _positive(n=self.n)
        if self.k < 0:
            raise DegenerateInputError("k must be non-negative")

    def params(self):
        return {"n": self.n, "k": self.k}

    def _check_points(self, points):
        _require_bits(points, self.n, "BooleanDecisionTree")

    def _consistent(self, points, labels):
        return min_tree_size_bruteforce(points, labels, self.k) is not None


@dataclass(frozen=True)
class Junta(FunctionClass):
    n: int
    k: int
    kind: ClassVar[str] = "junta"

    def __post_init__(self):
        _positive(n=self.n)
        if not 0 <= self.k <= self.n:
            raise DegenerateInputError("junta needs 0 ≤ k ≤ n")

    def params(self):
        return {"n": self.n, "k": self.k}

    def _check_points(self, points):
        _require_bits(points, self.n, "Junta")

    def _consistent(self, points, labels):
        return junta_witnesses(points, labels, self.n, self.k) is None


def junta_subsets(n: int, k: int) -> Iterable[Tuple[int, ...]]:
    count = comb(n, k)
    if count > MAX_JUNTA_SUBSETS:
        raise BudgetExceededError("junta candidate subsets", count, MAX_JUNTA_SUBSETS)
    return combinations(range(n), k)


def junta_conflict(points: Sequence[Tuple[int, ...]], labels: Labels,
                   J: Sequence[int]) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """A pair agreeing on J with different labels, or None."""
    seen: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], int]] = {}
    for p, l in zip(points, labels):
        key = tuple(p[j] for j in J)
        prior = seen.get(key)
        if prior is None:
            seen[key] = (p, l)
        elif prior[1] != l:
            return prior[0], p
    return None


def junta_witnesses(points, labels, n: int, k: int):
    """
    None when some k-subset J has no conflicting pair; otherwise the map
    J → conflicting pair for every candidate J.
    """
    witnesses = {}
    for J in junta_subsets(n, k):
        pair = junta_conflict(points, labels, J)
        if pair is None:
            return None
        witnesses[J] = pair
    return witnesses


@dataclass(frozen=True)
class Monotone(FunctionClass):
    """f(x) ≤ f(y) whenever x < y."""
    poset: Poset
    kind: ClassVar[str] = "monotone"

    def params(self):
        return {"n": self.poset.n}

    def _check_points(self, points):
        _require_indices(points, self.poset.n, "Monotone")

    def _consistent(self, points, labels):
        return first_violation(self.poset, points, labels) is None


@dataclass(frozen=True)
class SymmetricThreshold(FunctionClass):
    """Functions on [n] with at most t ones; t defaults to ⌊n/5⌋."""
    n: int
    t: Optional[int] = None
    kind: ClassVar[str] = "symmetric"

    def __post_init__(self):
        _positive(n=self.n)
        if self.t is None:
            object.__setattr__(self, "t", self.n // SYMMETRIC_FRACTION)
        if self.t < 0:
            raise DegenerateInputError("t must be non-negative")

    def params(self):
        return {"n": self.n, "t": self.t}

    def _check_points(self, points):
        _require_indices(points, self.n, "SymmetricThreshold")

    def _consistent(self, points, labels):
        return sum(labels) <= self.t


@dataclass(frozen=True)
class HyperplaneArrangement(FunctionClass):
    """
    Points are hyperplane indices i ∈ [n]; a member is a cell x ∈ R^d labelling
    i with 1 when h_i(x) = offset_i + ⟨coeffs_i, x⟩ > 0 and 0 when it is < 0.
    """
    functionals: Tuple[Tuple[Fraction, Tuple[Fraction, ...]], ...]
    kind: ClassVar[str] = "arrangement"

    def __post_init__(self):
        if not self.functionals:
            raise DegenerateInputError("arrangement needs at least one hyperplane")
        dims = {len(c) for _, c in self.functionals}
        if len(dims) != 1:
            raise DegenerateInputError("hyperplanes of mixed dimension")

    @property
    def d(self) -> int:
        return len(self.functionals[0][1])

    def params(self):
        return {"d": self.d, "lines": len(self.functionals)}

    def _check_points(self, points):
        _require_indices(points, len(self.functionals), "HyperplaneArrangement")

    def _consistent(self, points, labels):
        rows, rhs = [], []
        for i, label in zip(points, labels):
            offset, coeffs = self.functionals[i]
            if label:
                rows.append(coeffs)
                rhs.append(-offset)
            else:
                rows.append(tuple(-c for c in coeffs))
                rhs.append(offset)
        return find_strict_point(rows, rhs, self.d) is not None

    def is_general_position(self) -> bool:
        """Every d of the normals independent and no d+1 hyperplanes through one point."""
        d = self.d
        normals = [c for _, c in self.functionals]
        for idx in combinations(range(len(normals)), min(d, len(normals))):
            if len(idx) == d and determinant([normals[i] for i in idx]) == 0:
                return False
        for idx in combinations(range(len(normals)), d + 1):
            augmented = [tuple(normals[i]) + (self.functionals[i][0],) for i in idx]
            if determinant(augmented) == 0:
                return False
        return True

    @classmethod
    def random(cls, d: int, count: int, seed, coefficient_range: int = 1000) -> "HyperplaneArrangement":
        """Random general-position arrangement with integer coefficients; degenerate draws are redrawn."""
        rng = make_rng(seed)

        @retry(stop=stop_after_attempt(DEFAULT_REGENERATION_ATTEMPTS),
               retry=retry_if_exception_type(DegenerateSampleError), reraise=True)
        def _draw() -> "HyperplaneArrangement":
            functionals = []
            for _ in range(count):
                values = rng.integers(-coefficient_range, coefficient_range + 1, size=d + 1)
                functionals.append((Fraction(int(values[0])), tuple(Fraction(int(v)) for v in values[1:])))
            arrangement = cls(tuple(functionals))
            if not arrangement.is_general_position():
                raise DegenerateSampleError("arrangement not in general position")
            return arrangement

        return _draw()


@dataclass(frozen=True)
class ExplicitClass(FunctionClass):
    """A finite family given by its labellings of the abstract domain [n]."""
    n: int
    members: FrozenSet[Tuple[int, ...]]
    name: str = "explicit"
    kind: ClassVar[str] = "explicit"

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(tuple(int(v) for v in m) for m in self.members))
        if any(len(m) != self.n for m in self.members):
            raise DegenerateInputError("every member must label all n points")

    def params(self):
        return {"n": self.n, "members": len(self.members), "name": self.name}

    def _check_points(self, points):
        _require_indices(points, self.n, "ExplicitClass")

    def _consistent(self, points, labels):
        return any(all(m[p] == l for p, l in zip(points, labels)) for m in self.members)

    @classmethod
    def singleton(cls, labelling: Sequence[int], name: str = "singleton") -> "ExplicitClass":
        return cls(len(labelling), frozenset([tuple(labelling)]), name)

    @classmethod
    def random(cls, n: int, size: int, seed) -> "ExplicitClass":
        rng = make_rng(seed)
        total = 2 ** n
        picks = rng.choice(total, size=min(size, total), replace=False)
        members = [tuple((int(v) >> (n - 1 - j)) & 1 for j in range(n)) for v in picks]
        return cls(n, frozenset(members), "random")


def parity_class(n: int) -> ExplicitClass:
    """The single parity function on the points 0..2^n−1 read as bit vectors."""
    return ExplicitClass.singleton([bin(i).count("1") % 2 for i in range(2 ** n)], name="parity")


# ========== PARSEO DE SPECS ==========

def parse_spec_string(spec: str) -> Tuple[str, Dict[str, str]]:
    kind, _, rest = spec.strip().partition(":")
    params: Dict[str, str] = {}
    if rest:
        for item in rest.split(","):
            if not item.strip():
                continue
            if "=" not in item:
                raise SpecParseError(f"expected key=value in {spec!r}, got {item!r}")
            key, value = item.split("=", 1)
            params[key.strip()] = value.strip()
    return kind.strip(), params


def _int_param(params: Dict[str, str], key: str, spec: str, default: Optional[int] = None) -> int:
    if key not in params:
        if default is not None:
            return default
        raise SpecParseError(f"{spec!r} needs {key}=")
    try:
        return int(params[key])
    except ValueError:
        raise SpecParseError(f"{spec!r}: {key} must be an integer")


def parse_class_spec(spec: str) -> FunctionClass:
    """
    Resolve a CLI class spec.

    Raises:
        SpecParseError: unknown kind or missing / malformed parameters.
    """
    kind, params = parse_spec_string(spec)
    try:
        if kind == "intervals":
            return IntervalUnion(_int_param(params, "k", spec))
        if kind == "alternating":
            return Alternating(_int_param(params, "m", spec))
        if kind == "halfspace":
            return Halfspace(_int_param(params, "n", spec))
        if kind == "halfspace-intersection":
            return HalfspaceIntersection(_int_param(params, "n", spec), _int_param(params, "k", spec))
        if kind == "ptf":
            return Ptf(_int_param(params, "n", spec), _int_param(params, "k", spec), params.get("domain", "real"))
        if kind == "real-tree":
            return RealDecisionTree(_int_param(params, "n", spec), _int_param(params, "k", spec))
        if kind == "bool-tree":
            return BooleanDecisionTree(_int_param(params, "n", spec), _int_param(params, "k", spec))
        if kind == "junta":
            return Junta(_int_param(params, "n", spec), _int_param(params, "k", spec))
        if kind == "symmetric":
            n = _int_param(params, "n", spec)
            return SymmetricThreshold(n, int(params["t"]) if "t" in params else None)
        if kind == "monotone":
            if "poset" in params:
                source = params["poset"]
                return Monotone(load_poset_file(source[1:] if source.startswith("@") else source))
            if "chain" in params:
                return Monotone(Poset.chain(_int_param(params, "chain", spec)))
            if "antichain" in params:
                return Monotone(Poset.antichain(_int_param(params, "antichain", spec)))
            raise SpecParseError(f"{spec!r} needs poset=@file, chain=N or antichain=N")
        if kind == "arrangement":
            return HyperplaneArrangement.random(
                _int_param(params, "d", spec), _int_param(params, "lines", spec),
                _int_param(params, "seed", spec, default=0))
    except (DegenerateInputError, OSError) as exc:
        raise SpecParseError(f"{spec!r}: {exc}")
    raise SpecParseError(f"unknown class kind {kind!r} in {spec!r}")
