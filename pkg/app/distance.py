"""
Exact distance from a labelling to a class under a finite distribution, and
the random-labelling farness experiment.

exact_distance picks a class-specific exact path when one exists and
otherwise enumerates flip sets of the support in order of increasing cost,
returning the first one that makes the labelling consistent.
"""
import math
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, model_validator

from app.classes import (
    Alternating, FunctionClass, Halfspace, HalfspaceIntersection, IntervalUnion, Junta, Monotone,
    RealDecisionTree, SymmetricThreshold, axis_parameters, consistent, junta_subsets, line_parameters,
    moment_curve_preimage, standard_curve_preimage,
)
from app.core import FiniteDistribution, FiniteDomain, Labelling, Weight
from app.utils.constants import MAX_DISTANCE_SUPPORT
from app.utils.error_handler import BudgetExceededError, DomainMismatchError, UnsupportedDomainError
from app.utils.logger_config import get_logger
from app.utils.metrics import TRIALS
from app.utils.rng import derive_seed, make_rng
from app.utils.statistics import wilson_interval

logger = get_logger()

METHOD_AUTO = "auto"
METHOD_GENERIC = "generic"


class FarnessReport(BaseModel):
    trials: int = Field(ge=1)
    epsilon: float = Field(ge=0.0, le=1.0)
    far_count: int = Field(ge=0)
    far_fraction: float = Field(ge=0.0, le=1.0)
    domain_size: int
    vc: Optional[int] = None
    ci_low: float
    ci_high: float

    @model_validator(mode="after")
    def check_count(self):
        if self.far_count > self.trials:
            raise ValueError("far_count cannot exceed trials")
        return self


def _zero(D: FiniteDistribution) -> Weight:
    return Fraction(0) if D.exact else 0.0


# ========== DISTANCIA EXACTA ==========

def exact_distance(f: Labelling, C: FunctionClass, D: FiniteDistribution, method: str = METHOD_AUTO) -> Weight:
    """
    min over labellings ℓ of supp(D) consistent with C of Σ_{f ≠ ℓ} D(x).

    Args:
        f: labelling of D's domain
        C: class with an oracle for D's domain kind
        D: finite distribution
        method: "auto" (specialized path when available) or "generic"

    Raises:
        DomainMismatchError: f and D on different domains
        BudgetExceededError: generic path on a support above MAX_DISTANCE_SUPPORT
    """
    if f.domain != D.domain:
        raise DomainMismatchError("exact_distance: f and D must share one domain")
    idx = D.support_indices
    points = [D.domain.points[i] for i in idx]
    values = [f.values[i] for i in idx]
    weights = [D.weights[i] for i in idx]
    zero = _zero(D)
    if method == METHOD_AUTO:
        special = _specialized_distance(C, points, values, weights, zero)
        if special is not None:
            return special
    return _generic_distance(C, points, values, weights, zero)


def _generic_distance(C, points, values, weights, zero) -> Weight:
    s = len(points)
    if s > MAX_DISTANCE_SUPPORT:
        raise BudgetExceededError("distance support points", s, MAX_DISTANCE_SUPPORT)
    cost: List[Weight] = [zero] * (1 << s)
    for mask in range(1, 1 << s):
        low = mask & -mask
        cost[mask] = cost[mask ^ low] + weights[low.bit_length() - 1]
    for mask in sorted(range(1 << s), key=cost.__getitem__):
        labels = [v ^ ((mask >> i) & 1) for i, v in enumerate(values)]
        if consistent(C, points, labels):
            return cost[mask]
    # unreachable for classes containing a constant; report the full mass
    return sum(weights, zero)


def _specialized_distance(C, points, values, weights, zero) -> Optional[Weight]:
    if not points:
        return zero
    if isinstance(C, IntervalUnion):
        return _line_distance(line_parameters(points), values, weights, zero, max_blocks=C.k)
    if isinstance(C, Alternating):
        return _line_distance(line_parameters(points), values, weights, zero, max_alternations=C.m)
    if isinstance(C, RealDecisionTree):
        _, params = axis_parameters(points)
        return _line_distance(params, values, weights, zero, max_alternations=C.k)
    if isinstance(C, HalfspaceIntersection):
        xs = moment_curve_preimage(points, C.n)
        if xs is None:
            raise UnsupportedDomainError("HalfspaceIntersection distance needs a moment-curve domain")
        return _line_distance(xs, values, weights, zero, max_alternations=C.alternation_bound)
    if isinstance(C, Halfspace):
        xs = moment_curve_preimage(points, C.n)
        degree = C.n if C.n % 2 == 0 else C.n - 1
        if xs is None:
            xs = standard_curve_preimage(points)
            degree = C.n
        if xs is None:
            return None
        return _line_distance(xs, values, weights, zero, max_alternations=degree)
    if isinstance(C, Junta):
        return _junta_distance(C, points, values, weights, zero)
    if isinstance(C, Monotone):
        return _monotone_distance(C, points, values, weights, zero)
    if isinstance(C, SymmetricThreshold):
        ones = sorted((w for v, w in zip(values, weights) if v), reverse=True)
        return sum(ones[C.t:], zero)
    return None


def _line_distance(params: Sequence, values: Sequence[int], weights: Sequence[Weight], zero: Weight,
                   max_blocks: Optional[int] = None, max_alternations: Optional[int] = None) -> Weight:
    """
    Dynamic program along the sorted line. State: (label of the previous
    point, blocks of 1s opened or alternations used). Exactly one of the two
    limits is given.
    """
    order = sorted(range(len(params)), key=lambda i: params[i])
    limit = max_blocks if max_blocks is not None else max_alternations
    inf = None
    # best[(label, used)] = minimal disagreement weight so far
    best: Dict[Tuple[int, int], Weight] = {}
    first = order[0]
    for label in (0, 1):
        used = 1 if (max_blocks is not None and label == 1) else 0
        if used <= limit:
            best[(label, used)] = weights[first] if label != values[first] else zero
    for i in order[1:]:
        step: Dict[Tuple[int, int], Weight] = {}
        for (prev, used), total in best.items():
            for label in (0, 1):
                if max_blocks is not None:
                    nxt = used + (1 if (label == 1 and prev == 0) else 0)
                else:
                    nxt = used + (1 if label != prev else 0)
                if nxt > limit:
                    continue
                value = total + (weights[i] if label != values[i] else zero)
                key = (label, nxt)
                current = step.get(key, inf)
                if current is None or value < current:
                    step[key] = value
        best = step
    return min(best.values())


def _junta_distance(C: Junta, points, values, weights, zero) -> Weight:
    """Each row of a k-subset J takes its heavier label; minimize over J."""
    best: Optional[Weight] = None
    for J in junta_subsets(C.n, C.k):
        rows: Dict[Tuple[int, ...], List[Weight]] = {}
        for p, v, w in zip(points, values, weights):
            mass = rows.setdefault(tuple(p[j] for j in J), [zero, zero])
            mass[v] += w
        total = sum((min(r0, r1) for r0, r1 in rows.values()), zero)
        if best is None or total < best:
            best = total
    return best


def _monotone_distance(C: Monotone, points, values, weights, zero) -> Weight:
    """
    Minimum-weight vertex cover of the violation graph (ones below zeros).
    Flipping a cover leaves a labelling whose ones are an up-set of the
    support, so the cover weight is attained.
    """
    return monotone_repair(C, points, values, weights, zero)[0]


def monotone_repair(C: Monotone, points, values, weights, zero) -> Tuple[Weight, Tuple[int, ...]]:
    """(minimum cover weight, indices of `points` to flip)."""
    poset = C.poset
    ones = [i for i, v in enumerate(values) if v]
    zeros = [i for i, v in enumerate(values) if not v]
    adjacency = {i: [j for j in zeros if poset.less(points[i], points[j])] for i in ones}
    lower = [i for i in ones if adjacency[i]]
    upper = sorted({j for i in lower for j in adjacency[i]})
    if not lower:
        return zero, ()
    # enumerate the kept part of the smaller side; the other side is forced
    if len(lower) <= len(upper):
        side, other_of = lower, adjacency
    else:
        side = upper
        other_of = {j: [i for i in lower if j in adjacency[i]] for j in upper}
    if len(side) > MAX_DISTANCE_SUPPORT:
        raise BudgetExceededError("monotone cover side", len(side), MAX_DISTANCE_SUPPORT)
    best_cost: Optional[Weight] = None
    best_flip: Tuple[int, ...] = ()
    for r in range(len(side) + 1):
        for flipped in combinations(side, r):
            flipped_set = set(flipped)
            forced = {o for s in side if s not in flipped_set for o in other_of[s]}
            cost = sum((weights[i] for i in flipped_set | forced), zero)
            if best_cost is None or cost < best_cost:
                best_cost, best_flip = cost, tuple(sorted(flipped_set | forced))
    return best_cost, best_flip


# ========== EXPERIMENTO DE LEJANÍA ==========

def random_far_fraction(C: FunctionClass, T: FiniteDomain, epsilon: float, trials: int, seed: int,
                        vc: Optional[int] = None) -> FarnessReport:
    """Fraction of uniformly random labellings of T at distance > ε from C under uniform D on T."""
    D = FiniteDistribution.uniform(T)
    threshold = Fraction(epsilon).limit_denominator(10 ** 9)
    far = 0
    for trial in range(trials):
        rng = make_rng(derive_seed(seed, trial))
        f = Labelling(T, tuple(int(b) for b in rng.integers(0, 2, size=len(T))))
        if exact_distance(f, C, D) > threshold:
            far += 1
    TRIALS.labels(experiment="farness").inc(trials)
    low, high = wilson_interval(far, trials)
    logger.info(f"📊 farness {C.spec} |T|={len(T)} ε={epsilon}: {far}/{trials} lejos")
    return FarnessReport(trials=trials, epsilon=epsilon, far_count=far, far_fraction=far / trials,
                         domain_size=len(T), vc=vc, ci_low=low, ci_high=high)


# ========== COTAS DE CONTEO ==========

def farness_union_bound(d: int, m: int, epsilon: float) -> float:
    """
    Union bound on the probability that a random labelling of m points is
    ε-close to a class of VC dimension d:
    (Σ_{i≤d} C(m,i)) · (Σ_{i≤εm} C(m,i)) · 2^{−m}, capped at 1.
    """
    classes = sum(math.comb(m, i) for i in range(min(d, m) + 1))
    flips = sum(math.comb(m, i) for i in range(int(math.floor(epsilon * m)) + 1))
    return min(1.0, math.exp(math.log(classes) + math.log(flips) - m * math.log(2)))


def farness_exponent(K: float, epsilon: float) -> float:
    """ln(Ke) + Kε·ln(e/ε) − K·ln 2; negative means the bound decays like e^{exponent·d}."""
    tail = K * epsilon * math.log(math.e / epsilon) if epsilon > 0 else 0.0
    return math.log(K * math.e) + tail - K * math.log(2)


def min_far_multiplier(step: float = 0.01, upper: float = 10.0) -> float:
    """Smallest K on the grid with K·ln 2 > 1 + ln K."""
    steps = int(round(upper / step))
    for i in range(int(round(1.0 / step)) + 1, steps + 1):
        K = i * step
        if K * math.log(2) > 1 + math.log(K):
            return round(K, 10)
    raise ValueError("no multiplier satisfies the condition below the upper limit")
