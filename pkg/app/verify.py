"""
Verification suites: exact identities and Monte-Carlo checks of the
library's constructions, runnable one suite at a time or all together.

Each suite returns CheckResults; a suite passes when all of its checks
pass. Monte-Carlo checks compare Wilson bounds, never raw rates.
"""
import math
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError

from app.classes import (
    Alternating, BooleanDecisionTree, ExplicitClass, FunctionClass, Halfspace, HalfspaceIntersection,
    HyperplaneArrangement, IntervalUnion, Junta, Monotone, Poset, SymmetricThreshold, consistent,
    moment_curve_embed,
)
from app.core import (
    FiniteDistribution, FiniteDomain, Labelling, abstract_domain, full_cube_domain, normalize,
    real_line_domain, real_space_domain,
)
from app.dimension import (
    classify_extremal, consistent_labellings, is_shattered, lvc_dim, sauer_bound, shattered_subsets, vc_dim,
)
from app.distance import exact_distance, random_far_fraction
from app.hardness import (
    cluster_instance, balls_in_bins_check, cube_rank_check, general_position_set, hemisphere_frequency,
    lp_hard_instance, random_cube_domain, ssd_instance, ssd_parameters, wendel_probability,
)
from app.testers import (
    TesterConfig, bipartite_reduce, lp_feasibility_test, monotone_sample_size, monotone_test,
    one_sided_vc_test, run_birthday_ssd, run_junta_test, symmetric_sample_size, symmetric_test,
    cluster_cover_check,
)
from app.utils.config.config_constants import (
    KIND_POSET, SIDE_NO, SIDE_YES, SUITE_ALTERNATING, SUITE_ASW, SUITE_CLUSTER, SUITE_DIMS, SUITE_FARNESS,
    SUITE_JUNTA, SUITE_LP, SUITE_LVC_ONE_SIDED, SUITE_MAXIMUM, SUITE_MONOTONE, SUITE_SAUER, SUITE_SSD,
    SUITE_SSD_BIRTHDAY, SUITE_SYMMETRIC, SUITE_WENDEL, SUPPORT_LARGE, SUPPORT_SMALL, VALID_SUITES,
)
from app.utils.config.settings import get_default_seed, get_threads
from app.utils.constants import DEFAULT_BALL_TOLERANCE, DEFAULT_TARGET
from app.utils.error_handler import UnknownSuiteError
from app.utils.geometry.enclosing_ball import enclosing_radius
from app.utils.logger_config import get_logger
from app.utils.rng import derive_seed, make_rng
from app.utils.statistics import wilson_interval

logger = get_logger()


class CheckResult(BaseModel):
    name: str
    statement: str
    expected: str
    observed: str
    passed: bool


class VerifyReport(BaseModel):
    suite: str
    seed: int
    checks: List[CheckResult] = Field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _check(name: str, statement: str, expected, observed, passed: bool) -> CheckResult:
    return CheckResult(name=name, statement=statement, expected=str(expected), observed=str(observed),
                       passed=bool(passed))


def _rate_check(name: str, statement: str, successes: int, trials: int,
                lower: float = DEFAULT_TARGET) -> CheckResult:
    """Pass iff the Wilson lower bound of successes/trials reaches `lower`."""
    low, high = wilson_interval(successes, trials)
    return _check(name, statement, f"Wilson lower bound ≥ {lower:.4f}",
                  f"{successes}/{trials} (CI [{low:.4f}, {high:.4f}])", low >= lower)


def _fraction_check(name: str, statement: str, successes: int, trials: int, lower: float) -> CheckResult:
    """Pass iff the raw fraction reaches `lower`."""
    return _check(name, statement, f"fraction ≥ {lower}", f"{successes}/{trials} = {successes / trials:.4f}",
                  successes / trials >= lower)


# ========== CASOS DE DIMENSIÓN COMPARTIDOS ==========

def _dimension_cases() -> List[Tuple[str, FunctionClass, FiniteDomain, int]]:
    """(label, class, domain, expected vc = lvc) for the exact identities."""
    cases = []
    for k in (1, 2, 3):
        cases.append((f"intervals k={k} on 10 colinear points", IntervalUnion(k),
                      real_line_domain(range(1, 11)), 2 * k))
    for n in (2, 3):
        cases.append((f"halfspaces in R^{n} on 8 moment-curve points", Halfspace(n),
                      general_position_set(n, 8), n + 1))
    for n, k in ((2, 1), (2, 2), (4, 1)):
        size = 2 * n * k + 1
        domain = real_space_domain(moment_curve_embed(x, n) for x in range(1, size + 1))
        cases.append((f"intersections of {k} halfspaces in R^{n} on {size} curve points",
                      HalfspaceIntersection(n, k), domain, n * k + 1))
    for n in (10, 15):
        cases.append((f"at most ⌊n/5⌋ ones, n={n}", SymmetricThreshold(n), abstract_domain(n), n // 5))
    cases.append(("monotone on an antichain of 6", Monotone(Poset.antichain(6)),
                  FiniteDomain(tuple(range(6)), KIND_POSET), 6))
    return cases


_TREE_CASES = ((4, 1), (4, 2), (5, 3), (6, 4))
_TREE_POINTS = 12


def _tree_case(n: int, k: int, seed: int) -> Tuple[BooleanDecisionTree, FiniteDomain]:
    return BooleanDecisionTree(n, k), random_cube_domain(n, _TREE_POINTS, derive_seed(seed, n, k))


def _all_subsets_shattered(C: FunctionClass, S: FiniteDomain, size: int) -> bool:
    return all(is_shattered(C, T) for T in combinations(S.points, size))


def suite_dims(seed: int) -> List[CheckResult]:
    checks = []
    for label, C, S, expected in _dimension_cases():
        vc, lvc = vc_dim(C, S), lvc_dim(C, S)
        checks.append(_check(f"vc=lvc {label}", "the class shatters every subset of that size and none larger",
                             f"vc = lvc = {expected}", f"vc = {vc}, lvc = {lvc}", vc == lvc == expected))
        if isinstance(C, Halfspace):
            none_larger = not any(is_shattered(C, T) for T in combinations(S.points, C.n + 2))
            checks.append(_check(f"no {C.n + 2}-subset shattered, {label}",
                                 "no n+2 points are shattered by halfspaces in R^n",
                                 "no shattered subset", "none" if none_larger else "found one", none_larger))
    for n, k in _TREE_CASES:
        C, S = _tree_case(n, k, seed)
        target = min(k, _TREE_POINTS)
        ok = _all_subsets_shattered(C, S, target)
        checks.append(_check(f"bool-tree n={n} k={k} on {_TREE_POINTS} random cube points",
                             "any k distinct cube points are shattered by trees with k internal nodes",
                             f"lvc ≥ {target}", "every subset shattered" if ok else "unshattered subset", ok))
    return checks


# ========== SAUER ==========

_SAUER_INSTANCES = 100


def _random_sauer_instance(family: str, seed: int) -> Tuple[FunctionClass, FiniteDomain]:
    rng = make_rng(seed)
    if family == "intervals":
        size = int(rng.integers(1, 13))
        return IntervalUnion(int(rng.integers(1, 4))), real_line_domain(sorted(
            int(v) for v in rng.choice(100, size=size, replace=False)))
    if family == "halfspace":
        n = int(rng.integers(1, 3))
        return Halfspace(n), general_position_set(n, int(rng.integers(1, 8)))
    if family == "symmetric":
        n = int(rng.integers(1, 13))
        return SymmetricThreshold(n, int(rng.integers(0, n + 1))), abstract_domain(n)
    if family == "monotone":
        n = int(rng.integers(1, 11))
        return Monotone(Poset.random(n, float(rng.uniform(0.1, 0.6)), rng)), \
            FiniteDomain(tuple(range(n)), KIND_POSET)
    n = int(rng.integers(1, 9))
    return ExplicitClass.random(n, int(rng.integers(1, 2 ** n + 1)), rng), abstract_domain(n)


def _extremal_facts(C: FunctionClass, S: FiniteDomain) -> Dict[str, int]:
    """growth, shattering number, vc and lvc from one enumeration, without model validation."""
    size = len(S)
    G = consistent_labellings(C, S)
    family = shattered_subsets(G, size)
    counts = [0] * (size + 1)
    for subset in family:
        counts[len(subset)] += 1
    lvc = 0
    for k in range(1, size + 1):
        if counts[k] != math.comb(size, k):
            break
        lvc = k
    return {"growth": len(G), "sh": len(family), "vc": max(len(s) for s in family), "lvc": lvc, "size": size}


def suite_sauer(seed: int) -> List[CheckResult]:
    checks = []
    for family in ("intervals", "halfspace", "symmetric", "monotone", "explicit"):
        violations = []
        for i in range(_SAUER_INSTANCES):
            C, S = _random_sauer_instance(family, derive_seed(seed, i, len(family)))
            facts = _extremal_facts(C, S)
            bound = sauer_bound(facts["size"], facts["vc"])
            if not facts["growth"] <= facts["sh"] <= bound:
                violations.append(f"{C.spec}: {facts['growth']}, {facts['sh']}, {bound}")
        checks.append(_check(f"growth ≤ shattering ≤ Σ C(|S|,i) for {family}",
                             "the growth function is at most the number of shattered subsets, "
                             "which is at most the binomial sum up to the VC dimension",
                             "0 violations", f"{len(violations)} violations {violations[:3]}", not violations))
    return checks


# ========== ALTERNANCIAS ==========

def _k_fold(G: set, k: int, combine: Callable[[int, int], int]) -> set:
    out = set(G)
    for _ in range(k - 1):
        out = {combine(a, b) for a in out for b in G}
    return out


def suite_alternating(seed: int) -> List[CheckResult]:
    S = real_line_domain(range(1, 10))
    base = consistent_labellings(Alternating(2), S)
    checks = []
    for k in (1, 2, 3):
        target = consistent_labellings(Alternating(2 * k), S)
        for label, combine in (("intersections", lambda a, b: a & b), ("unions", lambda a, b: a | b)):
            realized = _k_fold(base, k, combine)
            checks.append(_check(f"{label} of {k} functions with 2 alternations on 9 points",
                                 f"{label} of k functions alternating at most m times are exactly the "
                                 f"functions alternating at most mk times",
                                 f"{len(target)} labellings, equal sets",
                                 f"{len(realized)} labellings, {'equal' if realized == target else 'different'}",
                                 realized == target))
    return checks


# ========== MÁXIMAS ==========

_MAXIMUM_RANDOM = 100


def suite_maximum(seed: int) -> List[CheckResult]:
    checks = []
    named = [("at most 2 ones on [10]", SymmetricThreshold(10), abstract_domain(10)),
             ("6-line general-position arrangement in R^2",
              HyperplaneArrangement.random(2, 6, derive_seed(seed, 6)), abstract_domain(6))]
    for label, C, S in named:
        report = classify_extremal(C, S)
        checks.append(_check(f"maximum: {label}", "the class meets the Sauer bound with equality",
                             f"growth = {report.sauer_bound}, is_maximum", f"growth = {report.growth}, "
                             f"is_maximum = {report.is_maximum}", report.is_maximum))
    mismatches = []
    maxima = 0
    for i in range(_MAXIMUM_RANDOM):
        rng = make_rng(derive_seed(seed, 100, i))
        n = int(rng.integers(1, 7))
        C = ExplicitClass.random(n, int(rng.integers(1, 2 ** n + 1)), rng)
        S = abstract_domain(n)
        try:
            report = classify_extremal(C, S)
        except ValidationError as exc:
            mismatches.append(f"{C.spec}: {exc.errors()[0]['msg']}")
            continue
        maxima += report.is_maximum
        if (report.vc, report.lvc) != (vc_dim(C, S), lvc_dim(C, S)):
            mismatches.append(f"{C.spec}: report vc/lvc differ from the subset scans")
    checks.append(_check("maximum ⇔ shatter-extremal and lvc = vc on random classes",
                         "a class is maximum exactly when it is shatter-extremal with lvc equal to vc",
                         "0 mismatches",
                         f"{len(mismatches)} mismatches ({maxima} maximum classes) {mismatches[:3]}",
                         not mismatches))
    return checks


# ========== LEJANÍA ==========

def suite_farness(seed: int) -> List[CheckResult]:
    C = IntervalUnion(2)
    big = random_far_fraction(C, real_line_domain(range(1, 17)), 0.05, 2000, derive_seed(seed, 16), vc=4)
    small = random_far_fraction(C, real_line_domain(range(1, 9)), 0.05, 2000, derive_seed(seed, 8), vc=4)
    return [
        _check("random labellings of 16 points are far from 2 intervals",
               "a random labelling of a set several times larger than the VC dimension is ε-far",
               "far fraction ≥ 0.9", f"{big.far_fraction:.4f}", big.far_fraction >= 0.9),
        _check("farness grows with |T|", "the far fraction does not drop when the set grows from 8 to 16",
               f"upper bound at 16 ≥ lower bound at 8 ({small.ci_low:.4f})",
               f"[{big.ci_low:.4f}, {big.ci_high:.4f}]", big.ci_high >= small.ci_low),
    ]


# ========== REDUCCIÓN SSD ==========

_SSD_SEEDS = 200


def suite_ssd(seed: int, epsilon: float = 0.05) -> List[CheckResult]:
    C = IntervalUnion(2)
    S = real_line_domain(range(1, 21))
    params = ssd_parameters(vc_dim(C, S), lvc_dim(C, S), len(S))
    zero, far = 0, 0
    for i in range(_SSD_SEEDS):
        yes = ssd_instance(C, S, SIDE_YES, params, derive_seed(seed, 0, i))
        zero += exact_distance(yes.f, C, yes.pushforward) == 0
        no = ssd_instance(C, S, SIDE_NO, params, derive_seed(seed, 1, i))
        far += exact_distance(no.f, C, no.pushforward) >= epsilon
    return [
        _check("yes-side instances are realizable", "support inside the LVC dimension gives distance 0",
               f"{_SSD_SEEDS}/{_SSD_SEEDS}", f"{zero}/{_SSD_SEEDS}", zero == _SSD_SEEDS),
        _fraction_check(f"no-side instances are {epsilon}-far",
                        "support K·VC with a random labelling is far from the class", far, _SSD_SEEDS, 0.85),
    ]


# ========== JUNTAS ==========

_JUNTA_ONE_SIDED = 500
_JUNTA_DETECTION = 200
_JUNTA_SUPPORT = 14


def _product_distribution(domain: FiniteDomain, rng) -> FiniteDistribution:
    bias = rng.uniform(0.1, 0.9, size=len(domain.points[0]))
    raw = [float(math.prod(b if x else 1 - b for x, b in zip(p, bias))) for p in domain.points]
    return normalize(raw, domain)


def _random_junta(domain: FiniteDomain, n: int, k: int, rng) -> Labelling:
    J = sorted(int(j) for j in rng.choice(n, size=k, replace=False))
    table = {bits: int(rng.integers(0, 2)) for bits in product((0, 1), repeat=k)}
    return Labelling.from_function(domain, lambda p: table[tuple(p[j] for j in J)])


def suite_junta(seed: int, epsilon: float = 0.1) -> List[CheckResult]:
    n, k = 8, 2
    cube = full_cube_domain(n)
    C = Junta(n, k)
    rejected = 0
    for i in range(_JUNTA_ONE_SIDED):
        rng = make_rng(derive_seed(seed, 0, i))
        D = _product_distribution(cube, rng)
        f = _random_junta(cube, n, k, rng)
        rejected += not run_junta_test(D, f, n, k, TesterConfig(epsilon=epsilon, seed=derive_seed(seed, 1, i))).accept

    caught, checked = 0, 0
    for i in range(_JUNTA_DETECTION):
        rng = make_rng(derive_seed(seed, 2, i))
        # redraw until the labelling is verified far on its support
        while True:
            support = [cube.points[int(j)] for j in rng.choice(len(cube), size=_JUNTA_SUPPORT, replace=False)]
            D = FiniteDistribution.uniform(cube, support)
            f = Labelling(cube, tuple(int(b) for b in rng.integers(0, 2, size=len(cube))))
            if exact_distance(f, C, D) > epsilon:
                break
        checked += 1
        caught += not run_junta_test(D, f, n, k, TesterConfig(epsilon=epsilon, seed=derive_seed(seed, 3, i))).accept
    return [
        _check("juntas are never rejected", "the junta tester is one-sided",
               f"0/{_JUNTA_ONE_SIDED} rejections", f"{rejected}/{_JUNTA_ONE_SIDED}", rejected == 0),
        _rate_check(f"{epsilon}-far functions are rejected", "far functions leave every coordinate set refuted",
                    caught, checked),
    ]


# ========== MONOTONÍA ==========

_MONOTONE_ONE_SIDED = 500
_MONOTONE_SANDWICH = 200
_MONOTONE_DETECTION = 200


def _random_poset_instance(rng, max_n: int = 10) -> Tuple[Poset, FiniteDistribution, FiniteDomain]:
    n = int(rng.integers(2, max_n + 1))
    P = Poset.random(n, float(rng.uniform(0.1, 0.5)), rng)
    domain = FiniteDomain(tuple(range(n)), KIND_POSET)
    D = normalize([int(w) for w in rng.integers(1, 6, size=n)], domain)
    return P, D, domain


def _random_up_set(P: Poset, domain: FiniteDomain, rng) -> Labelling:
    seeds = {e for e in range(P.n) if rng.random() < 0.3}
    return Labelling.from_function(domain, lambda e: int(e in seeds or any(P.less(u, e) for u in seeds)))


def suite_monotone(seed: int, epsilon: float = 0.2) -> List[CheckResult]:
    rejected = 0
    for i in range(_MONOTONE_ONE_SIDED):
        rng = make_rng(derive_seed(seed, 0, i))
        P, D, domain = _random_poset_instance(rng)
        f = _random_up_set(P, domain, rng)
        rejected += not monotone_test(P, D, f, TesterConfig(epsilon=0.1, seed=derive_seed(seed, 1, i))).accept

    sandwich_failures, preservation_failures = [], []
    for i in range(_MONOTONE_SANDWICH):
        rng = make_rng(derive_seed(seed, 2, i))
        P, D, domain = _random_poset_instance(rng)
        f = Labelling(domain, tuple(int(b) for b in rng.integers(0, 2, size=P.n)))
        B, q, g = bipartite_reduce(P, D, f)
        dist_p = exact_distance(f, Monotone(P), D)
        dist_b = exact_distance(g, Monotone(B), q)
        if not dist_p / 2 <= dist_b <= dist_p:
            sandwich_failures.append((P.n, dist_p, dist_b))
        mono_p = consistent(Monotone(P), list(range(P.n)), f.values)
        mono_b = consistent(Monotone(B), list(range(2 * P.n)), g.values)
        if mono_p != mono_b:
            preservation_failures.append(P.n)

    n = 64
    P = Poset.chain(n)
    domain = FiniteDomain(tuple(range(n)), KIND_POSET)
    D = FiniteDistribution.uniform(domain)
    leading = math.floor(epsilon * n) + 1
    f = Labelling.from_function(domain, lambda e: int(e < leading))
    m = monotone_sample_size(n, epsilon)
    caught = sum(not monotone_test(P, D, f, TesterConfig(epsilon=epsilon, m=m, seed=derive_seed(seed, 3, t))).accept
                 for t in range(_MONOTONE_DETECTION))
    return [
        _check("monotone functions are never rejected", "the poset tester is one-sided",
               f"0/{_MONOTONE_ONE_SIDED} rejections", f"{rejected}/{_MONOTONE_ONE_SIDED}", rejected == 0),
        _check("bipartite distance sandwich", "half the poset distance ≤ bipartite distance ≤ poset distance",
               "0 failures", f"{len(sandwich_failures)} failures {sandwich_failures[:3]}", not sandwich_failures),
        _check("monotonicity preserved by the bipartite reduction",
               "f is monotone on P exactly when its copy is monotone on the bipartite order",
               "0 failures", f"{len(preservation_failures)} failures", not preservation_failures),
        _rate_check(f"{leading} leading ones on a chain of {n} are rejected at m={m}",
                    "a labelling far from monotone yields a violating pair", caught, _MONOTONE_DETECTION),
    ]


# ========== SIMÉTRICA ==========

_SYMMETRIC_TRIALS = 300


def suite_symmetric(seed: int, epsilon: float = 0.2) -> List[CheckResult]:
    n = 1000
    domain = abstract_domain(n)
    member = Labelling.from_function(domain, lambda i: int(i < n // 5))
    far = Labelling.from_function(domain, lambda i: int(i < 2 * n // 5))
    m = symmetric_sample_size(epsilon)
    accepted = sum(symmetric_test(n, member, TesterConfig(epsilon=epsilon, seed=derive_seed(seed, 0, t))).accept
                   for t in range(_SYMMETRIC_TRIALS))
    rejected = sum(not symmetric_test(n, far, TesterConfig(epsilon=epsilon, seed=derive_seed(seed, 1, t))).accept
                   for t in range(_SYMMETRIC_TRIALS))
    return [
        _rate_check(f"⌊n/5⌋ ones accepted at m={m}", "the count of ones stays below the cutoff for members",
                    accepted, _SYMMETRIC_TRIALS),
        _rate_check(f"2n/5 ones rejected at m={m}", "the count of ones exceeds the cutoff for far functions",
                    rejected, _SYMMETRIC_TRIALS),
    ]


# ========== WENDEL ==========

_WENDEL_TRIALS = 100_000


def suite_wendel(seed: int) -> List[CheckResult]:
    checks = [_check("exact hemisphere probability t=6, n=3", "2^{1−t}·Σ_{k<n} C(t−1,k)",
                     Fraction(1, 2), wendel_probability(6, 3), wendel_probability(6, 3) == Fraction(1, 2))]
    for t, n in ((3, 2), (6, 3)):
        exact = float(wendel_probability(t, n))
        freq = hemisphere_frequency(t, n, _WENDEL_TRIALS, derive_seed(seed, t, n))
        checks.append(_check(f"hemisphere frequency t={t}, n={n}",
                             "random sphere points fall in a common hemisphere at the exact rate",
                             f"{exact:.4f} ± 0.01", f"{freq:.4f}", abs(freq - exact) <= 0.01))
    return checks


# ========== CLUSTERING ==========

_CLUSTER_SEEDS = 500
_CLUSTER_YES_ETA = 0.01
_CLUSTER_NO_ETA = 0.05


def suite_cluster(seed: int) -> List[CheckResult]:
    n, k = 30, 1
    covered, spread = 0, 0
    for i in range(_CLUSTER_SEEDS):
        yes = cluster_instance(n, k, _CLUSTER_YES_ETA, 15, SIDE_YES, derive_seed(seed, 0, i))
        covered += cluster_cover_check(yes.points, k)
        no = cluster_instance(n, k, _CLUSTER_NO_ETA, 60, SIDE_NO, derive_seed(seed, 1, i), warn_sparse=i == 0)
        spread += enclosing_radius(no.points) > 1 + DEFAULT_BALL_TOLERANCE
    over, under = balls_in_bins_check(4, n, 4, 0.5, 400, derive_seed(seed, 2))
    return [
        _fraction_check(f"few points on a sphere of radius {1 + _CLUSTER_YES_ETA} fit in a unit ball",
                        "a small sample from a slightly inflated sphere is 1-clusterable",
                        covered, _CLUSTER_SEEDS, 0.85),
        _fraction_check(f"many points on a sphere of radius {1 + _CLUSTER_NO_ETA} do not",
                        "a large sample from an inflated sphere has enclosing radius above 1",
                        spread, _CLUSTER_SEEDS, 0.95),
        _check("balls-in-bins maximum load", "with Cnk balls in k bins no bin exceeds (1+δ)Cn",
               "≥ 0.85", f"{over:.4f}", over >= 0.85),
        _check("balls-in-bins minimum load", "with Cnk balls in k bins every bin holds at least (1−δ)Cn",
               "≥ 0.85", f"{under:.4f}", under >= 0.85),
    ]


# ========== RANGO EN EL CUBO ==========

def suite_asw(seed: int) -> List[CheckResult]:
    fraction, threshold = cube_rank_check(20, 2, 37, 400, derive_seed(seed, 20))
    return [_check("random cube points have independent degree-2 monomial images (n=20, m=37)",
                   "below the threshold dimension, random points have full-rank monomial images",
                   "fraction ≥ 0.85", f"{fraction:.4f} (threshold m = {threshold})", fraction >= 0.85)]


# ========== CUMPLEAÑOS ==========

_BIRTHDAY_TRIALS = 300


def suite_ssd_birthday(seed: int) -> List[CheckResult]:
    d = 400
    m = math.ceil(8 * math.sqrt(d))
    domain = abstract_domain(3 * d)
    small = FiniteDistribution.uniform(domain, list(range(d)))
    large = FiniteDistribution.uniform(domain)
    right_small = sum(run_birthday_ssd(small, d, derive_seed(seed, 0, t), m=m) == SUPPORT_SMALL
                      for t in range(_BIRTHDAY_TRIALS))
    right_large = sum(run_birthday_ssd(large, d, derive_seed(seed, 1, t), m=m) == SUPPORT_LARGE
                      for t in range(_BIRTHDAY_TRIALS))
    return [
        _rate_check(f"support {d} called small at m={m}", "collisions are frequent on a small support",
                    right_small, _BIRTHDAY_TRIALS),
        _rate_check(f"support {3 * d} called large at m={m}", "collisions are rare on a large support",
                    right_large, _BIRTHDAY_TRIALS),
    ]


# ========== ε-RED UNILATERAL BAJO LVC ==========

def suite_lvc_one_sided(seed: int) -> List[CheckResult]:
    cfg = TesterConfig(epsilon=0.1, seed=seed)
    cases = list(_dimension_cases())
    for n, k in _TREE_CASES:
        C, S = _tree_case(n, k, seed)
        cases.append((f"bool-tree n={n} k={k}", C, S, min(k, _TREE_POINTS)))
    checks = []
    for label, C, S, size_limit in cases:
        rejected, total = 0, 0
        for size in range(1, size_limit + 1):
            for T in combinations(S.points, size):
                for labels in product((0, 1), repeat=size):
                    total += 1
                    rejected += not one_sided_vc_test(C, list(zip(T, labels)), cfg).accept
        checks.append(_check(f"every labelling of ≤ {size_limit} points accepted, {label}",
                             "samples no larger than the LVC dimension never let a one-sided tester reject",
                             f"0/{total} rejections", f"{rejected}/{total}", rejected == 0))
    return checks


# ========== LP ==========

_LP_SEEDS = 200


def _feasible_system(seed: int, n: int = 4, rows: int = 30):
    rng = make_rng(seed)
    x = [Fraction(int(v)) for v in rng.integers(-5, 6, size=n)]
    out = []
    for _ in range(rows):
        a = tuple(Fraction(int(v)) for v in rng.integers(-9, 10, size=n))
        out.append((a, sum(ai * xi for ai, xi in zip(a, x)) - int(rng.integers(0, 4))))
    return out


def suite_lp(seed: int, epsilon: float = 0.05) -> List[CheckResult]:
    accepted = sum(lp_feasibility_test(_feasible_system(derive_seed(seed, 0, i)),
                                       TesterConfig(epsilon=0.1, seed=derive_seed(seed, 1, i))).accept
                   for i in range(_LP_SEEDS))
    rejected = 0
    for i in range(_LP_SEEDS):
        instance = lp_hard_instance(6, SIDE_NO, derive_seed(seed, 2, i))
        cfg = TesterConfig(epsilon=epsilon, seed=derive_seed(seed, 3, i))
        rejected += not lp_feasibility_test(instance.constraints, cfg).accept
    return [
        _check("feasible systems are accepted", "a sampled subsystem of a feasible system is feasible",
               f"{_LP_SEEDS}/{_LP_SEEDS}", f"{accepted}/{_LP_SEEDS}", accepted == _LP_SEEDS),
        _rate_check(f"hard no-side systems rejected at ε={epsilon}",
                    "large random-labelled supports on the moment curve are not separable with margin",
                    rejected, _LP_SEEDS),
    ]


# ========== REGISTRO Y EJECUCIÓN ==========

SUITES: Dict[str, Callable[[int], List[CheckResult]]] = {
    SUITE_DIMS: suite_dims,
    SUITE_SAUER: suite_sauer,
    SUITE_ALTERNATING: suite_alternating,
    SUITE_MAXIMUM: suite_maximum,
    SUITE_FARNESS: suite_farness,
    SUITE_SSD: suite_ssd,
    SUITE_JUNTA: suite_junta,
    SUITE_MONOTONE: suite_monotone,
    SUITE_SYMMETRIC: suite_symmetric,
    SUITE_WENDEL: suite_wendel,
    SUITE_CLUSTER: suite_cluster,
    SUITE_ASW: suite_asw,
    SUITE_SSD_BIRTHDAY: suite_ssd_birthday,
    SUITE_LVC_ONE_SIDED: suite_lvc_one_sided,
    SUITE_LP: suite_lp,
}

SUITE_ALL = "all"


def list_suites() -> List[str]:
    return list(VALID_SUITES)


def verify(suite: str, seed: Optional[int] = None) -> VerifyReport:
    """
    Run one suite.

    Raises:
        UnknownSuiteError: suite not in list_suites()
    """
    runner = SUITES.get(suite)
    if runner is None:
        raise UnknownSuiteError(f"unknown suite {suite!r}; available: {', '.join(VALID_SUITES)}")
    seed = get_default_seed() if seed is None else seed
    start = time.time()
    logger.info(f"🔄 verify {suite} (seed={seed})")
    checks = runner(seed)
    report = VerifyReport(suite=suite, seed=seed, checks=checks, elapsed=time.time() - start)
    for c in report.failures:
        logger.error(f"❌ {suite}: {c.name} | esperado {c.expected} | observado {c.observed}")
    logger.info(f"{'✅' if report.passed else '❌'} verify {suite}: "
                f"{len(checks) - len(report.failures)}/{len(checks)} checks en {report.elapsed:.1f}s")
    return report


def verify_many(suites: Sequence[str], seed: Optional[int] = None,
                threads: Optional[int] = None) -> List[VerifyReport]:
    """Run several suites on a thread pool; reports come back in the requested order."""
    names = list(VALID_SUITES) if list(suites) == [SUITE_ALL] else list(suites)
    for name in names:
        if name not in SUITES:
            raise UnknownSuiteError(f"unknown suite {name!r}; available: {', '.join(VALID_SUITES)}")
    seed = get_default_seed() if seed is None else seed
    threads = get_threads() if threads is None else threads
    reports: Dict[str, VerifyReport] = {}
    with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="lvc-verify") as executor:
        futures = {executor.submit(verify, name, seed): name for name in names}
        for future in as_completed(futures):
            name = futures[future]
            try:
                reports[name] = future.result()
            except Exception as e:
                logger.error(f"❌ Suite {name} terminó con error: {e}")
                raise
    return [reports[name] for name in names]
