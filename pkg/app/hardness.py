"""
Hard-instance generators and the geometric facts they rest on.

- ssd_instance: support-size distinction pushed through a bijection onto a
  point set S with a uniformly random labelling (yes side: support inside
  the LVC dimension, so the labelling is realizable; no side: support large
  enough that a random labelling is far).
- general_position_set / cube_rank_check: point sets whose small subsets are
  shattered by halfspaces / cube PTFs.
- cluster_instance / wendel_probability / balls_in_bins_check: the sphere
  construction behind the clustering bounds.
- lp_hard_instance: margin-1 constraint systems built from SSD-style
  multiplicities on a general-position set.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator
from tenacity import retry, retry_if_exception_type, stop_after_attempt

from app.classes import FunctionClass, HyperplaneArrangement, Ptf, monomial_index, standard_moment_curve
from app.core import (
    FiniteDistribution, FiniteDomain, Labelling, abstract_domain, cube_domain, real_line_domain,
    real_space_domain,
)
from app.dimension import cached_lvc_with_certificate
from app.testers import AffineConstraint, margin_constraints
from app.utils.config.config_constants import SIDE_NO, SIDE_YES, VALID_SIDES
from app.utils.constants import (
    CLUSTER_SPHERE_GAP, DEFAULT_BALL_TOLERANCE, DEFAULT_REGENERATION_ATTEMPTS, DEFAULT_SSD_MULTIPLIER,
    MAX_RANK_COLUMNS, SMALL_CUBE_BITS, SSD_SET_FACTOR,
)
from app.utils.error_handler import (
    BudgetExceededError, DegenerateInputError, DegenerateSampleError, DomainMismatchError, PreconditionError,
)
from app.utils.geometry.enclosing_ball import min_enclosing_ball  # noqa: F401  (re-exported)
from app.utils.geometry.linalg import exact_rank
from app.utils.logger_config import get_logger
from app.utils.metrics import TRIALS
from app.utils.rng import SeedLike, derive_seed, make_rng

logger = get_logger()


# ========== REDUCCIÓN SSD ==========

class SsdParams(BaseModel):
    n: int = Field(ge=1)
    alpha: float = Field(gt=0.0, le=1.0)
    beta: float = Field(gt=0.0, le=1.0)
    delta: float = Field(default=0.125, gt=0.0, lt=0.5)
    K: int = Field(default=DEFAULT_SSD_MULTIPLIER, ge=1)

    @model_validator(mode="after")
    def check_order(self):
        if not self.alpha < self.beta:
            raise ValueError(f"alpha must be below beta, got {self.alpha} ≥ {self.beta}")
        return self

    @property
    def yes_support(self) -> int:
        return math.floor(self.alpha * self.n + 1e-12)

    @property
    def no_support(self) -> int:
        return min(self.n, math.ceil(self.beta * self.n - 1e-12))


def ssd_parameters(vc: int, lvc: int, n: int, K: int = DEFAULT_SSD_MULTIPLIER) -> SsdParams:
    """
    α = LVC/n, β = K·VC/n, δ = LVC/(2K·VC) for a point set of size n.

    Raises:
        DegenerateInputError: n < 5·VC, or K·VC > (1 − δ)·n
    """
    if lvc < 1 or vc < lvc:
        raise DegenerateInputError(f"need 1 ≤ lvc ≤ vc, got lvc={lvc}, vc={vc}")
    if n < SSD_SET_FACTOR * vc:
        raise DegenerateInputError(f"|S| = {n} is below {SSD_SET_FACTOR}·VC = {SSD_SET_FACTOR * vc}")
    delta = lvc / (2 * K * vc)
    if K * vc > (1 - delta) * n:
        raise DegenerateInputError(f"K·VC = {K * vc} exceeds (1 − δ)·n = {(1 - delta) * n}")
    return SsdParams(n=n, alpha=lvc / n, beta=K * vc / n, delta=delta, K=K)


@dataclass(frozen=True)
class SsdInstance:
    side: str
    D: FiniteDistribution              # over [n]
    phi: Tuple                         # phi[i] ∈ S
    f: Labelling                       # over S
    seed: int
    independence_ok: Optional[bool] = None

    @property
    def pushforward(self) -> FiniteDistribution:
        """φ·D as a distribution on S."""
        weights = [Fraction(0)] * len(self.f.domain)
        for i, w in enumerate(self.D.weights):
            weights[self.f.domain.index_of(self.phi[i])] += w
        return FiniteDistribution(self.f.domain, tuple(weights))


def _support_size(side: str, params: SsdParams) -> int:
    if side not in VALID_SIDES:
        raise DegenerateInputError(f"side must be yes or no, got {side!r}")
    size = params.yes_support if side == SIDE_YES else params.no_support
    if size < 1:
        raise DegenerateInputError(f"{side} side support ⌊α·n⌋ is 0; pick a larger alpha")
    return size


def _draw_instance(S: FiniteDomain, side: str, size: int, n: int, rng, seed: int,
                   independence_ok: Optional[bool] = None) -> SsdInstance:
    support = sorted(int(i) for i in rng.choice(n, size=size, replace=False))
    share = Fraction(1, size)
    chosen = set(support)
    D = FiniteDistribution(abstract_domain(n), tuple(share if i in chosen else Fraction(0) for i in range(n)))
    perm = rng.permutation(n)
    phi = tuple(S.points[int(j)] for j in perm)
    f = Labelling(S, tuple(int(b) for b in rng.integers(0, 2, size=n)))
    return SsdInstance(side=side, D=D, phi=phi, f=f, seed=seed, independence_ok=independence_ok)


def ssd_instance(C: FunctionClass, S: Optional[FiniteDomain], side: str, params: SsdParams,
                 seed: int) -> SsdInstance:
    """
    Draw one SSD instance. Cube PTF classes may pass S=None to use a fresh
    random S ⊆ {0,1}ⁿ per instance; the yes side then records whether the
    monomial images of the support were linearly independent.

    Raises:
        PreconditionError: yes side with ⌊α·n⌋ > LVC_S(C); names the first unshattered subset
        DegenerateInputError: empty support, |S| ≠ n
    """
    size = _support_size(side, params)
    rng = make_rng(seed)
    n = params.n
    if S is None:
        if not isinstance(C, Ptf) or C.domain != "cube":
            raise DomainMismatchError("a random S is only drawn for cube polynomial threshold classes")
        S = random_cube_domain(C.n, n, rng)
        instance = _draw_instance(S, side, size, n, rng, seed)
        if side == SIDE_YES:
            images = [[int(v) for v in C.embed(instance.phi[i])] for i in instance.D.support_indices]
            ok = exact_rank(images) == len(images)
            if not ok:
                logger.warning(f"⚠️ ssd_instance seed={seed}: soporte sin independencia lineal, se registra")
            instance = SsdInstance(side, instance.D, instance.phi, instance.f, seed, independence_ok=ok)
        return instance

    if len(S) != n:
        raise DegenerateInputError(f"|S| = {len(S)} but params.n = {n}")
    if side == SIDE_YES:
        lvc, certificate = cached_lvc_with_certificate(C, S)
        if lvc < size:
            raise PreconditionError(
                f"LVC_S({C.spec}) = {lvc} < ⌊α·n⌋ = {size}",
                subset=certificate.subset if certificate else None,
                labelling=certificate.labelling if certificate else None)
    return _draw_instance(S, side, size, n, rng, seed)


# ========== CONJUNTOS EN POSICIÓN GENERAL ==========

def general_position_set(n: int, size: int) -> FiniteDomain:
    """(x, x², …, xⁿ) for x = 1..size; every n+1 of them are affinely independent."""
    if n < 1 or size < 0:
        raise DegenerateInputError("general_position_set needs n ≥ 1 and size ≥ 0")
    if n == 1:
        return real_line_domain(range(1, size + 1))
    return real_space_domain(standard_moment_curve(x, n) for x in range(1, size + 1))


def random_cube_domain(n: int, size: int, seed: SeedLike) -> FiniteDomain:
    """
    `size` distinct uniform points of {0,1}ⁿ. Small cubes are drawn without
    replacement by index; on larger cubes a draw with duplicates is redrawn.
    """
    if size > 2 ** n:
        raise DegenerateInputError(f"cannot draw {size} distinct points from {{0,1}}^{n}")
    rng = make_rng(seed)
    if n <= SMALL_CUBE_BITS:
        picks = rng.choice(2 ** n, size=size, replace=False)
        return cube_domain(tuple((int(v) >> (n - 1 - j)) & 1 for j in range(n)) for v in picks)

    @retry(stop=stop_after_attempt(DEFAULT_REGENERATION_ATTEMPTS),
           retry=retry_if_exception_type(DegenerateSampleError), reraise=True)
    def _draw() -> FiniteDomain:
        bits = rng.integers(0, 2, size=(size, n))
        points = [tuple(int(b) for b in row) for row in bits]
        if len(set(points)) != len(points):
            raise DegenerateSampleError("duplicate cube points")
        return cube_domain(points)

    return _draw()


def hyperplane_arrangement(d: int, count: int, seed: SeedLike) -> HyperplaneArrangement:
    return HyperplaneArrangement.random(d, count, seed)


# ========== RANGO EN EL CUBO ==========

def cube_monomial_dimension(n: int, k: int) -> int:
    return sum(math.comb(n, i) for i in range(min(n, k) + 1))


def asw_threshold(n: int, k: int, t: int) -> int:
    """C(n − ⌈log₂ C(n,≤k)⌉ − t, ≤k); 0 when the reduced dimension is negative."""
    reduced = n - math.ceil(math.log2(cube_monomial_dimension(n, k))) - t
    if reduced < 0:
        return 0
    return cube_monomial_dimension(reduced, k)


def cube_rank_check(n: int, k: int, m: int, trials: int, seed: int, t: int = 4) -> Tuple[float, int]:
    """
    Fraction of trials in which m uniform ±1 vectors have linearly
    independent monomial images, and the threshold asw_threshold(n, k, t).
    """
    columns = cube_monomial_dimension(n, k)
    if columns > MAX_RANK_COLUMNS:
        raise BudgetExceededError("monomial columns", columns, MAX_RANK_COLUMNS)
    monomials = monomial_index(n, k)
    full = 0
    for trial in range(trials):
        rng = make_rng(derive_seed(seed, trial))
        signs = 1 - 2 * rng.integers(0, 2, size=(m, n))
        image = np.ones((m, columns), dtype=np.int64)
        for c, a in enumerate(monomials):
            if a:
                image[:, c] = np.prod(signs[:, list(a)], axis=1)
        if exact_rank(image.tolist()) == m:
            full += 1
    TRIALS.labels(experiment="cube-rank").inc(trials)
    fraction = full / trials if trials else 0.0
    logger.info(f"📊 cube_rank_check n={n} k={k} m={m}: {full}/{trials} con rango completo")
    return fraction, asw_threshold(n, k, t)


# ========== ESFERAS Y HEMISFERIOS ==========

def wendel_probability(t: int, n: int) -> Fraction:
    """2^{1−t}·Σ_{k<n} C(t−1, k): t uniform points on the sphere in Rⁿ lie in a common hemisphere."""
    if t < 1 or n < 1:
        raise DegenerateInputError("wendel_probability needs t ≥ 1 and n ≥ 1")
    return Fraction(sum(math.comb(t - 1, k) for k in range(n)), 2 ** (t - 1))


def _uniform_sphere(rng, count: int, n: int, radius: float = 1.0) -> np.ndarray:
    g = rng.standard_normal((count, n))
    return radius * g / np.linalg.norm(g, axis=1, keepdims=True)


def hemisphere_frequency(t: int, n: int, trials: int, seed: int) -> float:
    """
    Monte-Carlo frequency of t uniform sphere points lying in a hemisphere,
    i.e. of the origin lying outside their convex hull. The origin is inside
    iff some n+1 of the points span a simplex containing it.
    """
    if t <= n:
        return 1.0
    rng = make_rng(seed)
    simplices = np.array(list(combinations(range(t), n + 1)))
    inside = 0
    for _ in range(trials):
        P = _uniform_sphere(rng, t, n)
        A = np.concatenate([P[simplices].transpose(0, 2, 1), np.ones((len(simplices), 1, n + 1))], axis=1)
        rhs = np.zeros((len(simplices), n + 1))
        rhs[:, -1] = 1.0
        lam = np.linalg.solve(A, rhs[..., None])[..., 0]
        if np.any(np.all(lam >= 0, axis=1)):
            inside += 1
    TRIALS.labels(experiment="hemisphere").inc(trials)
    return 1.0 - inside / trials


def sphere_cover_union_bound(n: int, m: int, epsilon: float) -> float:
    """
    C(m, m−t)·Wendel(t, n) with t = ⌈(1−ε)m⌉: a bound on the chance that
    some t of m sphere points fit in one unit ball (k = 1), capped at 1.
    """
    t = math.ceil((1 - epsilon) * m)
    return float(min(Fraction(1), math.comb(m, m - t) * wendel_probability(t, n)))


@dataclass(frozen=True)
class ClusterInstance:
    centers: np.ndarray = field(repr=False)
    radius: float
    points: np.ndarray = field(repr=False)
    assignments: np.ndarray = field(repr=False)
    side: str
    eta: float

    @property
    def k(self) -> int:
        return len(self.centers)

    def on_spheres(self, tol: float = DEFAULT_BALL_TOLERANCE) -> bool:
        offsets = self.points - self.centers[self.assignments]
        return bool(np.all(np.abs(np.linalg.norm(offsets, axis=1) - self.radius) <= tol))

    def min_center_distance(self) -> float:
        if self.k < 2:
            return math.inf
        return min(float(np.linalg.norm(a - b)) for a, b in combinations(self.centers, 2))

    def distribution(self) -> FiniteDistribution:
        """Empirical distribution of the sampled points (multiplicities kept)."""
        pts = [tuple(float(c) for c in p) for p in self.points]
        counts = {}
        for p in pts:
            counts[p] = counts.get(p, 0) + 1
        domain = real_space_domain(list(counts))
        return FiniteDistribution(domain, tuple(Fraction(c, len(pts)) for c in counts.values()))


def cluster_centers(n: int, k: int) -> np.ndarray:
    """c_i = 3·(i+1)·e_i; sphere gaps are at least 3 for radius ≤ 1.5."""
    centers = np.zeros((k, n))
    for i in range(k):
        centers[i, i] = CLUSTER_SPHERE_GAP * (i + 1)
    return centers


def cluster_instance(n: int, k: int, eta: float, m: int, side: str, seed: int,
                     warn_sparse: bool = True) -> ClusterInstance:
    """
    m points from the uniform mixture of k spheres of radius 1+η.

    A no side with m < 4nk logs a warning; batch callers pass warn_sparse=False
    after their first draw and get it at debug level.

    Raises:
        PreconditionError: k ≥ e^{n/6}/10, k > n, yes side with m > nk/2,
            no side with m outside [2nk, 8nk]
    """
    if side not in VALID_SIDES:
        raise DegenerateInputError(f"side must be yes or no, got {side!r}")
    if k < 1 or k > n:
        raise PreconditionError(f"need 1 ≤ k ≤ n, got k={k}, n={n}")
    if not k < math.exp(n / 6) / 10:
        raise PreconditionError(f"k={k} is not below e^(n/6)/10 = {math.exp(n / 6) / 10:.3f}")
    if side == SIDE_YES and m > n * k / 2:
        raise PreconditionError(f"yes side needs m ≤ nk/2 = {n * k / 2}, got m={m}")
    if side == SIDE_NO:
        if not 2 * n * k <= m <= 8 * n * k:
            raise PreconditionError(f"no side needs 2nk ≤ m ≤ 8nk ({2 * n * k}..{8 * n * k}), got m={m}")
        if m < 4 * n * k:
            log = logger.warning if warn_sparse else logger.debug
            log(f"⚠️ cluster_instance: m={m} < 4nk={4 * n * k}; cada esfera recibe pocos puntos")
    rng = make_rng(seed)
    centers = cluster_centers(n, k)
    radius = 1.0 + eta
    assignments = rng.integers(0, k, size=m)
    points = centers[assignments] + _uniform_sphere(rng, m, n, radius)
    return ClusterInstance(centers=centers, radius=radius, points=points, assignments=assignments,
                           side=side, eta=eta)


def balls_in_bins_check(Cload: float, n: int, k: int, delta: float, trials: int,
                        seed: int) -> Tuple[float, float]:
    """Empirical P(max load ≤ (1+δ)Cn) and P(min load ≥ (1−δ)Cn) for Cnk balls in k bins."""
    if k > math.exp(delta ** 2 * Cload * n / 3) / 10:
        logger.warning(f"⚠️ balls_in_bins_check: k={k} supera e^(δ²Cn/3)/10; la cota de Chernoff no aplica")
    balls = int(round(Cload * n * k))
    expected = Cload * n
    rng = make_rng(seed)
    loads = rng.multinomial(balls, [1.0 / k] * k, size=trials)
    over = float(np.mean(loads.max(axis=1) <= (1 + delta) * expected))
    under = float(np.mean(loads.min(axis=1) >= (1 - delta) * expected))
    TRIALS.labels(experiment="balls-in-bins").inc(trials)
    return over, under


def clustering_reduction_constants(n: int, k: int) -> Tuple[int, Fraction, Fraction]:
    """(N, α, β) = (8nk, 1/16, 1/2) for the clustering lower bound reduction."""
    return 8 * n * k, Fraction(1, 16), Fraction(1, 2)


# ========== INSTANCIAS LP ==========

@dataclass(frozen=True)
class LpInstance:
    side: str
    domain: FiniteDomain                 # general-position points in Rⁿ
    labels: Labelling
    multiplicities: Tuple[int, ...]      # per point; sum = len(domain)

    @property
    def constraints(self) -> List[AffineConstraint]:
        """ℓ(x)·(w₀ + ⟨w, x⟩) ≥ 1 in the variables (w₀, w), repeated by multiplicity."""
        rows = margin_constraints(self.domain.points, self.labels.values)
        return [row for row, mult in zip(rows, self.multiplicities) for _ in range(mult)]

    def distribution(self) -> FiniteDistribution:
        total = sum(self.multiplicities)
        return FiniteDistribution(self.domain, tuple(Fraction(c, total) for c in self.multiplicities))


def lp_hard_instance(n: int, side: str, seed: int,
                     support_sizes: Optional[Tuple[int, int]] = None) -> LpInstance:
    """
    N = 5(n+1) points of the moment curve in Rⁿ with a random labelling; the
    support has n+1 points on the yes side (always separable) and ⌈4N/5⌉ on
    the no side. Each support point gets multiplicity ≥ 1 and the
    multiplicities add up to N, so every density is a multiple of 1/N.
    """
    if side not in VALID_SIDES:
        raise DegenerateInputError(f"side must be yes or no, got {side!r}")
    N = SSD_SET_FACTOR * (n + 1)
    yes_size, no_size = support_sizes if support_sizes is not None else (n + 1, math.ceil(4 * N / 5))
    size = yes_size if side == SIDE_YES else no_size
    if not 1 <= size <= N:
        raise PreconditionError(f"support size {size} outside 1..{N}")
    if side == SIDE_YES and size > n + 1:
        raise PreconditionError(f"yes side support {size} exceeds n+1 = {n + 1}")
    rng = make_rng(seed)
    domain = general_position_set(n, N)
    support = sorted(int(i) for i in rng.choice(N, size=size, replace=False))
    extra = rng.multinomial(N - size, [1.0 / size] * size)
    multiplicities = [0] * N
    for i, e in zip(support, extra):
        multiplicities[i] = 1 + int(e)
    labels = Labelling(domain, tuple(int(b) for b in rng.integers(0, 2, size=N)))
    return LpInstance(side=side, domain=domain, labels=labels, multiplicities=tuple(multiplicities))
