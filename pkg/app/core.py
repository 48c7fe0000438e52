"""
Core value types: finite domains, labellings, finite distributions.

Points are plain hashable Python values:
    real vectors  -> tuple of Fraction (exact) or float
    bit vectors   -> tuple of 0/1 ints
    poset element -> int index into the poset
    abstract      -> int index in [n]
All types are frozen and safe to share between threads.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from app.utils.config.config_constants import (
    KIND_ABSTRACT, KIND_CUBE, KIND_POSET, KIND_REAL_LINE, KIND_REAL_SPACE, VALID_DOMAIN_KINDS,
)
from app.utils.error_handler import DegenerateInputError, DomainMismatchError
from app.utils.rng import SeedLike, make_rng

Point = Hashable
Weight = Union[Fraction, float]

WEIGHT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class FiniteDomain:
    points: Tuple[Point, ...]
    kind: str
    _index: Dict[Point, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.kind not in VALID_DOMAIN_KINDS:
            raise DegenerateInputError(f"unknown domain kind {self.kind!r}")
        index = {}
        for i, p in enumerate(self.points):
            if p in index:
                raise DegenerateInputError(f"duplicate point {p!r} in domain")
            index[p] = i
        object.__setattr__(self, "_index", index)
        self._check_shape()

    def _check_shape(self) -> None:
        if self.kind in (KIND_POSET, KIND_ABSTRACT):
            for p in self.points:
                if not isinstance(p, int) or p < 0:
                    raise DegenerateInputError(f"{self.kind} points must be non-negative ints, got {p!r}")
            return
        dims = {len(p) for p in self.points}
        if len(dims) > 1:
            raise DegenerateInputError(f"points of mixed dimension {sorted(dims)} in one domain")
        if self.kind == KIND_REAL_LINE and dims and dims != {1}:
            raise DegenerateInputError("real-line points must be 1-tuples")
        if self.kind == KIND_CUBE:
            for p in self.points:
                if any(b not in (0, 1) for b in p):
                    raise DegenerateInputError(f"cube point {p!r} is not a 0/1 vector")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, point: Point) -> bool:
        return point in self._index

    @property
    def dimension(self) -> Optional[int]:
        if self.kind in (KIND_POSET, KIND_ABSTRACT) or not self.points:
            return None
        return len(self.points[0])

    def index_of(self, point: Point) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise DomainMismatchError(f"point {point!r} is not in the domain")

    def subdomain(self, indices: Iterable[int]) -> "FiniteDomain":
        return FiniteDomain(tuple(self.points[i] for i in indices), self.kind)


# ========== CONSTRUCTORES DE DOMINIOS ==========

def abstract_domain(n: int) -> FiniteDomain:
    return FiniteDomain(tuple(range(n)), KIND_ABSTRACT)


def real_line_domain(xs: Iterable) -> FiniteDomain:
    return FiniteDomain(tuple((_exact(x),) for x in xs), KIND_REAL_LINE)


def real_space_domain(points: Iterable[Sequence]) -> FiniteDomain:
    return FiniteDomain(tuple(tuple(_exact(c) for c in p) for p in points), KIND_REAL_SPACE)


def cube_domain(points: Iterable[Sequence[int]]) -> FiniteDomain:
    return FiniteDomain(tuple(tuple(int(b) for b in p) for p in points), KIND_CUBE)


def full_cube_domain(n: int) -> FiniteDomain:
    return cube_domain(tuple((i >> (n - 1 - j)) & 1 for j in range(n)) for i in range(2 ** n))


def _exact(x):
    """ints and Fractions stay exact; floats pass through unchanged."""
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return x


# ========== LABELLINGS ==========

@dataclass(frozen=True)
class Labelling:
    domain: FiniteDomain
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != len(self.domain):
            raise DomainMismatchError(
                f"labelling has {len(values)} values for a domain of {len(self.domain)} points")
        if any(v not in (0, 1) for v in values):
            raise DegenerateInputError("labels must be 0 or 1")
        object.__setattr__(self, "values", values)

    def __getitem__(self, point: Point) -> int:
        return self.values[self.domain.index_of(point)]

    def __len__(self) -> int:
        return len(self.values)

    def restrict(self, points: Sequence[Point]) -> Tuple[int, ...]:
        return tuple(self[p] for p in points)

    def complement(self) -> "Labelling":
        return Labelling(self.domain, tuple(1 - v for v in self.values))

    def ones(self) -> int:
        return sum(self.values)

    def as_string(self) -> str:
        return "".join(str(v) for v in self.values)

    @classmethod
    def from_function(cls, domain: FiniteDomain, fn: Callable[[Point], int]) -> "Labelling":
        return cls(domain, tuple(int(fn(p)) for p in domain.points))

    @classmethod
    def from_string(cls, domain: FiniteDomain, bits: str) -> "Labelling":
        bits = bits.strip()
        if any(ch not in "01" for ch in bits):
            raise DegenerateInputError(f"labelling string must be 0/1 only, got {bits!r}")
        return cls(domain, tuple(int(ch) for ch in bits))

    @classmethod
    def constant(cls, domain: FiniteDomain, value: int) -> "Labelling":
        return cls(domain, (value,) * len(domain))


# ========== DISTRIBUTIONS ==========

@dataclass(frozen=True)
class FiniteDistribution:
    domain: FiniteDomain
    weights: Tuple[Weight, ...]

    def __post_init__(self):
        weights = tuple(w if isinstance(w, (Fraction, float)) else Fraction(w) for w in self.weights)
        if len(weights) != len(self.domain):
            raise DomainMismatchError(
                f"{len(weights)} weights for a domain of {len(self.domain)} points")
        if any(w < 0 for w in weights):
            raise DegenerateInputError("weights must be non-negative")
        total = sum(weights)
        if all(isinstance(w, Fraction) for w in weights):
            if total != 1:
                raise DegenerateInputError(f"weights sum to {total}, not 1")
        elif abs(float(total) - 1.0) > WEIGHT_TOLERANCE:
            raise DegenerateInputError(f"weights sum to {float(total)!r}, not 1")
        object.__setattr__(self, "weights", weights)

    @property
    def exact(self) -> bool:
        return all(isinstance(w, Fraction) for w in self.weights)

    @property
    def n(self) -> int:
        return len(self.domain)

    @property
    def support_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    @property
    def support(self) -> Tuple[Point, ...]:
        return tuple(self.domain.points[i] for i in self.support_indices)

    def weight(self, point: Point) -> Weight:
        return self.weights[self.domain.index_of(point)]

    def min_density(self) -> Weight:
        return min(self.weights[i] for i in self.support_indices)

    def satisfies_density_promise(self, n: Optional[int] = None) -> bool:
        """Every support point carries weight at least 1/n (n defaults to the domain size)."""
        n = self.n if n is None else n
        floor = Fraction(1, n) if self.exact else 1.0 / n
        return all(self.weights[i] >= floor for i in self.support_indices)

    def probabilities(self) -> np.ndarray:
        p = np.array([float(w) for w in self.weights], dtype=float)
        return p / p.sum()

    @classmethod
    def uniform(cls, domain: FiniteDomain, points: Optional[Sequence[Point]] = None) -> "FiniteDistribution":
        chosen = domain.points if points is None else tuple(points)
        if not chosen:
            raise DegenerateInputError("uniform distribution over an empty support")
        share = Fraction(1, len(chosen))
        members = {domain.index_of(p) for p in chosen}
        return cls(domain, tuple(share if i in members else Fraction(0) for i in range(len(domain))))

    @classmethod
    def point_mass(cls, domain: FiniteDomain, point: Point) -> "FiniteDistribution":
        return cls.uniform(domain, [point])


def normalize(raw_weights: Sequence, domain: Optional[FiniteDomain] = None) -> FiniteDistribution:
    """
    Divide non-negative weights by their sum.

    Integer / Fraction inputs stay exact; any float input switches to float mode.
    Without a domain the result lives on the abstract domain [len(raw_weights)].
    """
    raw = list(raw_weights)
    domain = abstract_domain(len(raw)) if domain is None else domain
    if any(w < 0 for w in raw):
        raise DegenerateInputError("weights must be non-negative")
    if all(isinstance(w, Rational) for w in raw):
        values = [Fraction(w) for w in raw]
        total = sum(values)
        if total == 0:
            raise DegenerateInputError("cannot normalize all-zero weights")
        return FiniteDistribution(domain, tuple(v / total for v in values))
    values = [float(w) for w in raw]
    total = float(np.sum(values))
    if total <= 0:
        raise DegenerateInputError("cannot normalize all-zero weights")
    scaled = [v / total for v in values]
    return FiniteDistribution(domain, tuple(scaled))


def dist_between(f: Labelling, g: Labelling, D: FiniteDistribution) -> Weight:
    """Σ D(x) over points where f and g disagree."""
    if f.domain != g.domain or f.domain != D.domain:
        raise DomainMismatchError("dist_between: f, g and D must share one domain")
    total = Fraction(0) if D.exact else 0.0
    for a, b, w in zip(f.values, g.values, D.weights):
        if a != b:
            total += w
    return total


def sample_indices(D: FiniteDistribution, m: int, seed: SeedLike) -> List[int]:
    if m < 0:
        raise DegenerateInputError("sample size must be non-negative")
    if m == 0:
        return []
    rng = make_rng(seed)
    draws = rng.choice(len(D.domain), size=m, replace=True, p=D.probabilities())
    return [int(i) for i in draws]


def sample(D: FiniteDistribution, m: int, seed: SeedLike) -> List[Point]:
    """m i.i.d. draws from D; bit-identical for equal seeds."""
    return [D.domain.points[i] for i in sample_indices(D, m, seed)]


def labelled_sample(D: FiniteDistribution, f: Labelling, m: int, seed: SeedLike) -> List[Tuple[Point, int]]:
    if f.domain != D.domain:
        raise DomainMismatchError("labelled_sample: f and D must share one domain")
    return [(D.domain.points[i], f.values[i]) for i in sample_indices(D, m, seed)]
