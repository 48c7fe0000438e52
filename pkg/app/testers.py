"""
Upper-bound testers.

Each tester takes its samples (or draws them through the matching run_*
helper) and returns a Verdict. One-sided testers always attach the
certificate that made them reject.

Default sample sizes (all overridable through TesterConfig.m / .s):
    one-sided ε-net   m = ⌈(8/ε)(d·ln(16/ε) + ln 3)⌉
    junta             s = ⌈ln(3·C(n,k)) / ln(5/4)⌉ rounds of
                      m = ⌈(2/ε)(1 + √(2^{k+1}·ln 2)) + 24/ε⌉
    monotone          m = ⌈10·√n / ε⌉
    symmetric         m = ⌈(50/ε²)·ln 3⌉
    birthday          m = ⌈8·√d⌉
    LP feasibility    m = ⌈4n / ε⌉
    clustering        m = ⌈4·(nk·ln(k+1)/ε)·ln(e/ε)⌉
"""
import math
from collections import Counter
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.classes import FunctionClass, Monotone, Poset, consistent, junta_witnesses
from app.core import FiniteDistribution, FiniteDomain, Labelling, sample, sample_indices
from app.dimension import vc_dim
from app.distance import monotone_repair
from app.utils.config.config_constants import KIND_POSET, SUPPORT_LARGE, SUPPORT_SMALL
from app.utils.config.settings import get_default_seed
from app.utils.constants import (
    BIRTHDAY_CONSTANT, CLUSTER_CONSTANT, DEFAULT_BALL_TOLERANCE, JUNTA_CHERNOFF_CONSTANT, LP_CONSTANT,
    MAX_COVER_BALL_CALLS, MAX_COVER_POINTS, MONOTONE_CONSTANT, ONE_SIDED_CONSTANT, SYMMETRIC_CONSTANT,
    SYMMETRIC_FRACTION,
)
from app.utils.error_handler import BudgetExceededError, DegenerateInputError, DomainMismatchError
from app.utils.geometry.enclosing_ball import enclosing_radius
from app.utils.geometry.feasibility import find_feasible_point
from app.utils.logger_config import get_logger
from app.utils.metrics import record_verdict
from app.utils.rng import derive_seed, make_rng

logger = get_logger()

LabelledSample = Sequence[Tuple[Any, int]]
AffineConstraint = Tuple[Tuple[Fraction, ...], Fraction]   # a·x ≥ b


class TesterConfig(BaseModel):
    epsilon: float = Field(gt=0.0, lt=1.0)
    m: Optional[int] = Field(default=None, ge=1)
    s: Optional[int] = Field(default=None, ge=1)
    seed: int = Field(default_factory=get_default_seed)


class Verdict(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    tester: str
    accept: bool
    samples_used: int = Field(ge=0)
    witness: Optional[Any] = None
    one_sided: bool = True
    details: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_witness(self):
        if self.one_sided and not self.accept and self.witness is None:
            raise ValueError("a one-sided tester cannot reject without a witness")
        return self


def _verdict(tester: str, accept: bool, samples_used: int, witness=None, one_sided: bool = True,
             **details) -> Verdict:
    record_verdict(tester, accept)
    verdict = Verdict(tester=tester, accept=accept, samples_used=samples_used,
                      witness=None if accept and one_sided else witness,
                      one_sided=one_sided, details=details)
    logger.debug(f"{'✅' if accept else '❌'} {tester}: {'acepta' if accept else 'rechaza'} con {samples_used} muestras")
    return verdict


def _dedupe(labelled: LabelledSample) -> Tuple[List[Any], List[int]]:
    points, labels, seen = [], [], set()
    for p, l in labelled:
        if p in seen:
            continue
        seen.add(p)
        points.append(p)
        labels.append(int(l))
    return points, labels


# ========== TESTER ε-RED (UNILATERAL) ==========

def one_sided_sample_size(d: int, epsilon: float) -> int:
    return math.ceil((ONE_SIDED_CONSTANT / epsilon) * (d * math.log(16 / epsilon) + math.log(3)))


def one_sided_vc_test(C: FunctionClass, labelled_sample: LabelledSample, cfg: TesterConfig) -> Verdict:
    """Accept iff some member of C agrees with every sampled label."""
    points, labels = _dedupe(labelled_sample)
    accept = consistent(C, points, labels)
    witness = {"points": points, "labels": labels}
    return _verdict("one-sided-vc", accept, len(labelled_sample), witness)


def run_one_sided_vc_test(C: FunctionClass, D: FiniteDistribution, f: Labelling, cfg: TesterConfig,
                          d: Optional[int] = None) -> Verdict:
    if cfg.m is None:
        if d is None:
            d = vc_dim(C, FiniteDomain(D.support, D.domain.kind))
        m = one_sided_sample_size(d, cfg.epsilon)
    else:
        m = cfg.m
    idx = sample_indices(D, m, cfg.seed)
    return one_sided_vc_test(C, [(D.domain.points[i], f.values[i]) for i in idx], cfg)


# ========== JUNTAS ==========

def junta_repetitions(n: int, k: int) -> int:
    return math.ceil(math.log(3 * math.comb(n, k)) / math.log(5 / 4))


def junta_sample_size(k: int, epsilon: float) -> int:
    return math.ceil((2 / epsilon) * (1 + math.sqrt(2 ** (k + 1) * math.log(2)))
                     + JUNTA_CHERNOFF_CONSTANT / epsilon)


def junta_test(n: int, k: int, labelled_sample: LabelledSample, cfg: TesterConfig) -> Verdict:
    """
    Reject iff every k-subset J of coordinates is refuted by a witness pair:
    two sampled points agreeing on J with different labels. The rounds of the
    sampling procedure are pooled into one sample before this check.
    """
    points, labels = _dedupe(labelled_sample)
    for p in points:
        if len(p) != n:
            raise DomainMismatchError(f"junta_test expects points of length {n}, got {p!r}")
    witnesses = junta_witnesses(points, labels, n, k) if points else None
    return _verdict("junta", witnesses is None, len(labelled_sample), witnesses)


def run_junta_test(D: FiniteDistribution, f: Labelling, n: int, k: int, cfg: TesterConfig) -> Verdict:
    rounds = cfg.s if cfg.s is not None else junta_repetitions(n, k)
    per_round = cfg.m if cfg.m is not None else junta_sample_size(k, cfg.epsilon)
    idx = []
    for r in range(rounds):
        idx.extend(sample_indices(D, per_round, derive_seed(cfg.seed, r)))
    return junta_test(n, k, [(D.domain.points[i], f.values[i]) for i in idx], cfg)


# ========== MONOTONÍA EN POSETS ==========

def bipartite_reduce(P: Poset, D: FiniteDistribution, f: Labelling
                     ) -> Tuple[Poset, FiniteDistribution, Labelling]:
    """
    Two copies of P: x ↦ x (lower copy X) and x ↦ n + x (upper copy Y), an
    edge (x, n + y) whenever x < y in P. Each copy carries half of D and a
    copy of f.
    """
    n = P.n
    if D.domain != f.domain:
        raise DomainMismatchError("bipartite_reduce: f and D must share one domain")
    if any(not isinstance(e, int) or not 0 <= e < n for e in D.domain.points):
        raise DomainMismatchError("bipartite_reduce: D must live on the elements of P")
    lower = tuple(range(n))
    upper = tuple(range(n, 2 * n))
    edges = frozenset((a, n + b) for a, b in P.relation)
    B = Poset(2 * n, edges, parts=(lower, upper))

    weight_of = {e: D.weights[i] for i, e in enumerate(D.domain.points)}
    label_of = {e: f.values[i] for i, e in enumerate(D.domain.points)}
    zero = Fraction(0) if D.exact else 0.0
    halves = [weight_of.get(e, zero) / 2 for e in range(n)]
    domain = FiniteDomain(lower + upper, KIND_POSET)
    q = FiniteDistribution(domain, tuple(halves + halves))
    copied = [label_of.get(e, 0) for e in range(n)]
    g = Labelling(domain, tuple(copied + copied))
    return B, q, g


def monotone_sample_size(n: int, epsilon: float) -> int:
    return math.ceil(MONOTONE_CONSTANT * math.sqrt(n) / epsilon)


def bipartite_monotone_test(B: Poset, q: FiniteDistribution, g: Labelling, m: int, seed) -> Verdict:
    """Reject iff the sample holds x ∈ X, y ∈ Y with x < y, g(x)=1, g(y)=0."""
    if B.parts is None:
        raise DegenerateInputError("bipartite_monotone_test needs a bipartite order")
    lower = set(B.parts[0])
    drawn = sorted(set(sample(q, m, seed)))
    ones = [x for x in drawn if x in lower and g[x] == 1]
    zeros = [y for y in drawn if y not in lower and g[y] == 0]
    for x in ones:
        for y in zeros:
            if B.less(x, y):
                return _verdict("monotone", False, m, (x, y))
    return _verdict("monotone", True, m)


def monotone_test(P: Poset, D: FiniteDistribution, f: Labelling, cfg: TesterConfig) -> Verdict:
    """Poset monotonicity through the bipartite reduction; the witness is reported in P's elements."""
    B, q, g = bipartite_reduce(P, D, f)
    m = cfg.m if cfg.m is not None else monotone_sample_size(P.n, cfg.epsilon)
    verdict = bipartite_monotone_test(B, q, g, m, cfg.seed)
    if verdict.accept:
        return verdict
    x, y = verdict.witness
    return verdict.model_copy(update={"witness": (x, y - P.n)})


def repair_to_monotone(P: Poset, D: FiniteDistribution, f: Labelling) -> Tuple[Any, Labelling]:
    """
    A monotone labelling at exact distance dist_D(f, Monotone(P)) from f:
    flip a minimum cover of the violated pairs in supp(D), then take the
    up-closure of the remaining ones over all of P.
    """
    support = D.support
    idx = D.support_indices
    values = [f.values[i] for i in idx]
    weights = [D.weights[i] for i in idx]
    zero = Fraction(0) if D.exact else 0.0
    cost, flips = monotone_repair(Monotone(P), list(support), values, weights, zero)
    repaired = list(values)
    for i in flips:
        repaired[i] ^= 1
    seeds = {p for p, v in zip(support, repaired) if v}
    g = Labelling.from_function(
        f.domain, lambda e: int(e in seeds or any(P.less(u, e) for u in seeds)))
    return cost, g


# ========== CLASE SIMÉTRICA ==========

def symmetric_sample_size(epsilon: float) -> int:
    return math.ceil((SYMMETRIC_CONSTANT / epsilon ** 2) * math.log(3))


def symmetric_test(n: int, f: Union[Callable[[int], int], Labelling], cfg: TesterConfig,
                   t: Optional[int] = None) -> Verdict:
    """
    Query f at m uniform points of [n] and reject iff the number X of ones
    exceeds (1 + ε/2)·m/5. With an explicit threshold t the cutoff is
    (1 + ε/2)·t·m/n instead.
    """
    query = f.values.__getitem__ if isinstance(f, Labelling) else f
    m = cfg.m if cfg.m is not None else symmetric_sample_size(cfg.epsilon)
    rng = make_rng(cfg.seed)
    queries = rng.integers(0, n, size=m)
    X = sum(int(query(int(i))) for i in queries)
    if t is None:
        cutoff = (1 + cfg.epsilon / 2) * m / SYMMETRIC_FRACTION
    else:
        cutoff = (1 + cfg.epsilon / 2) * t * m / n
    accept = X <= cutoff
    return _verdict("symmetric", accept, m, {"ones": X, "cutoff": cutoff}, one_sided=False,
                    ones=X, cutoff=cutoff)


def symmetric_failure_bound(m: int, epsilon: float) -> float:
    """exp(−m·ε²/50): Hoeffding bound on either error of symmetric_test."""
    return math.exp(-m * epsilon ** 2 / SYMMETRIC_CONSTANT)


# ========== DISTINGUIDOR DE SOPORTE (CUMPLEAÑOS) ==========

def birthday_sample_size(d: int) -> int:
    return math.ceil(BIRTHDAY_CONSTANT * math.sqrt(d))


def collision_pairs(samples: Sequence) -> int:
    return sum(c * (c - 1) // 2 for c in Counter(samples).values())


def birthday_threshold(m: int, d: int) -> float:
    """
    Midpoint-style cutoff C(m,2)·2/(3d): uniform support d expects C(m,2)/d
    colliding pairs, support 3d expects a third of that.
    """
    return math.comb(m, 2) * 2 / (3 * d)


def birthday_ssd(samples: Sequence, d: int, threshold: Optional[float] = None) -> str:
    """`small` (support ≤ d) iff the colliding pairs exceed the threshold, else `large` (≥ 3d)."""
    theta = birthday_threshold(len(samples), d) if threshold is None else threshold
    return SUPPORT_SMALL if collision_pairs(samples) > theta else SUPPORT_LARGE


def run_birthday_ssd(D: FiniteDistribution, d: int, seed, m: Optional[int] = None,
                     threshold: Optional[float] = None) -> str:
    m = birthday_sample_size(d) if m is None else m
    answer = birthday_ssd(sample_indices(D, m, seed), d, threshold)
    record_verdict("birthday", answer == SUPPORT_SMALL)
    return answer


def calibrate_birthday_threshold(d: int, m: int, trials: int, seed: int) -> float:
    """
    Threshold maximizing the worse of the two success rates on simulated
    uniform supports d and 3d.
    """
    small, large = [], []
    for trial in range(trials):
        rng = make_rng(derive_seed(seed, trial))
        small.append(collision_pairs(rng.integers(0, d, size=m).tolist()))
        large.append(collision_pairs(rng.integers(0, 3 * d, size=m).tolist()))
    small_arr, large_arr = np.array(small), np.array(large)
    best_theta, best_score = birthday_threshold(m, d), -1.0
    for theta in sorted(set(small) | set(large)):
        candidate = theta + 0.5
        score = min(float(np.mean(small_arr > candidate)), float(np.mean(large_arr <= candidate)))
        if score > best_score:
            best_theta, best_score = candidate, score
    logger.info(f"📊 calibración cumpleaños d={d} m={m}: θ={best_theta} (éxito mínimo {best_score:.3f})")
    return best_theta


def birthday_failure_bound(m: int, n: int) -> float:
    """exp(−m(m−1)/(2n)): probability of seeing no collision among m draws from support n, approximately."""
    return math.exp(-m * (m - 1) / (2 * n))


# ========== FACTIBILIDAD LP ==========

def lp_sample_size(n: int, epsilon: float) -> int:
    return math.ceil(LP_CONSTANT * n / epsilon)


def lp_feasibility_test(constraints: Sequence[AffineConstraint], cfg: TesterConfig,
                        weights: Optional[Sequence[float]] = None) -> Verdict:
    """
    Sample constraints (uniformly, or by `weights`) with replacement and
    accept iff the sampled subsystem is feasible. The witness of a rejection
    is the infeasible subsystem.
    """
    if not constraints:
        return _verdict("lp", True, 0)
    n = len(constraints[0][0])
    if any(len(a) != n for a, _ in constraints):
        raise DomainMismatchError("lp_feasibility_test: constraints of mixed dimension")
    m = cfg.m if cfg.m is not None else lp_sample_size(n, cfg.epsilon)
    rng = make_rng(cfg.seed)
    p = None if weights is None else np.asarray(weights, dtype=float) / float(np.sum(weights))
    picks = rng.choice(len(constraints), size=m, replace=True, p=p)
    chosen = sorted({int(i) for i in picks})
    subsystem = [constraints[i] for i in chosen]
    point = find_feasible_point([a for a, _ in subsystem], [b for _, b in subsystem], n)
    return _verdict("lp", point is not None, m, subsystem, one_sided=True)


def margin_constraints(points: Sequence[Sequence], labels: Sequence[int]) -> List[AffineConstraint]:
    """ℓ(x)·(w₀ + ⟨w, x⟩) ≥ 1 in the variables (w₀, w), one row per labelled point."""
    out = []
    for p, label in zip(points, labels):
        if not isinstance(p, tuple):
            raise DomainMismatchError(f"margin constraints need real vectors, got {p!r}")
        sign = 1 if label else -1
        out.append(((Fraction(sign),) + tuple(sign * Fraction(c) for c in p), Fraction(1)))
    return out


def run_lp_feasibility_test(D: FiniteDistribution, f: Labelling, cfg: TesterConfig) -> Verdict:
    """Margin-1 separability of f on supp(D), sampling constraints by D's weights."""
    if f.domain != D.domain:
        raise DomainMismatchError("run_lp_feasibility_test: f and D must share one domain")
    idx = D.support_indices
    constraints = margin_constraints([D.domain.points[i] for i in idx], [f.values[i] for i in idx])
    return lp_feasibility_test(constraints, cfg, weights=[float(D.weights[i]) for i in idx])


# ========== CLUSTERING ==========

def cluster_sample_size(n: int, k: int, epsilon: float) -> int:
    return math.ceil(CLUSTER_CONSTANT * (n * k * math.log(k + 1) / epsilon) * math.log(math.e / epsilon))


def _components(X: np.ndarray, reach: float) -> List[List[int]]:
    diff = X[:, None, :] - X[None, :, :]
    close = np.einsum("ijk,ijk->ij", diff, diff) <= reach * reach
    parent = list(range(len(X)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in zip(*np.nonzero(np.triu(close, 1))):
        ri, rj = find(int(i)), find(int(j))
        if ri != rj:
            parent[rj] = ri
    groups: Dict[int, List[int]] = {}
    for i in range(len(X)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


class _BallBudget:
    def __init__(self):
        self.calls = 0

    def radius(self, X: np.ndarray) -> float:
        self.calls += 1
        if self.calls > MAX_COVER_BALL_CALLS:
            raise BudgetExceededError("cover search ball evaluations", self.calls, MAX_COVER_BALL_CALLS)
        return enclosing_radius(X)


def _min_groups(X: np.ndarray, limit: int, budget: _BallBudget, tol: float) -> Optional[int]:
    """Fewest groups (≤ limit) of rows of X each inside a unit ball, by exact partition search."""
    if len(X) > MAX_COVER_POINTS:
        raise BudgetExceededError("cover search points", len(X), MAX_COVER_POINTS)
    best = [None]

    def place(i: int, groups: List[List[int]]):
        if best[0] is not None and len(groups) >= best[0]:
            return
        if i == len(X):
            best[0] = len(groups)
            return
        for g in groups:
            g.append(i)
            if budget.radius(X[g]) <= 1 + tol:
                place(i + 1, groups)
            g.pop()
        if len(groups) < limit:
            groups.append([i])
            place(i + 1, groups)
            groups.pop()

    place(0, [])
    return best[0]


def cluster_cover_check(points: Sequence[Sequence[float]], k: int,
                        tol: float = DEFAULT_BALL_TOLERANCE) -> bool:
    """
    True iff the points fit in the union of k balls of radius 1.

    Points farther than 2 apart never share a ball, so the points split into
    connected components at distance 2 first; only a component whose own
    enclosing ball is too large goes through the partition search.
    """
    if k < 1:
        raise DegenerateInputError("k must be ≥ 1")
    X = np.unique(np.asarray(points, dtype=float), axis=0) if len(points) else np.zeros((0, 1))
    if len(X) == 0:
        return True
    if k == 1:
        return enclosing_radius(X) <= 1 + tol
    components = _components(X, 2.0 + tol)
    if len(components) > k:
        return False
    budget = _BallBudget()
    used = 0
    for position, comp in enumerate(components):
        remaining_after = len(components) - position - 1
        limit = k - used - remaining_after
        if budget.radius(X[comp]) <= 1 + tol:
            used += 1
            continue
        need = _min_groups(X[comp], limit, budget, tol)
        if need is None:
            return False
        used += need
    return used <= k


def cluster_test(D: FiniteDistribution, k: int, cfg: TesterConfig) -> Verdict:
    """Sample from D and accept iff the sample is covered by k unit balls; the witness is the sample."""
    n = D.domain.dimension or 1
    m = cfg.m if cfg.m is not None else cluster_sample_size(n, k, cfg.epsilon)
    drawn = sample(D, m, cfg.seed)
    distinct = sorted(set(drawn))
    accept = cluster_cover_check([[float(c) for c in p] for p in distinct], k)
    return _verdict("cluster", accept, m, distinct)
