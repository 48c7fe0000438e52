"""
Exact shattering, VC / LVC dimension, growth function and shattering number.

Every routine goes through `classes.consistent`. Subsets and labellings are
scanned lexicographically by point index, so the first failure found is
reproducible and is returned as a certificate.
"""
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import List, NamedTuple, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, model_validator

from app.classes import FunctionClass, consistent
from app.core import FiniteDomain, Point
from app.utils.config.settings import get_oracle_call_budget
from app.utils.constants import MAX_GROWTH_POINTS, MAX_SHATTER_POINTS
from app.utils.error_handler import BudgetExceededError
from app.utils.logger_config import get_logger

logger = get_logger()


class Certificate(NamedTuple):
    """A subset together with a labelling of it that the class cannot realize."""
    subset: Tuple[Point, ...]
    labelling: Tuple[int, ...]


class DimensionReport(BaseModel):
    size: int
    vc: int
    lvc: int
    shattering_number: int
    growth: int
    sauer_bound: int
    is_maximum: bool
    is_shatter_extremal: bool
    lvc_equals_vc: bool

    @model_validator(mode="after")
    def check_invariants(self):
        if not self.lvc <= self.vc <= self.size:
            raise ValueError(f"lvc ≤ vc ≤ |S| violated: {self.lvc}, {self.vc}, {self.size}")
        if not self.growth <= self.shattering_number <= self.sauer_bound:
            raise ValueError(
                f"growth ≤ sh ≤ sauer violated: {self.growth}, {self.shattering_number}, {self.sauer_bound}")
        if self.is_maximum != (self.is_shatter_extremal and self.lvc_equals_vc):
            raise ValueError("maximum must coincide with shatter-extremal and lvc = vc")
        return self


class _CallBudget:
    """Counts oracle calls of one scan against the configured budget."""

    def __init__(self, what: str):
        self.what = what
        self.limit = get_oracle_call_budget()
        self.used = 0

    def charge(self, calls: int = 1) -> None:
        self.used += calls
        if self.used > self.limit:
            raise BudgetExceededError(self.what, self.used, self.limit)


# ========== SHATTERING ==========

def first_unrealized_labelling(C: FunctionClass, T: Sequence[Point],
                               budget: Optional[_CallBudget] = None) -> Optional[Tuple[int, ...]]:
    """First labelling of T (lexicographic, 0 before 1) that C cannot realize, or None."""
    T = list(T)
    if len(T) > MAX_SHATTER_POINTS:
        raise BudgetExceededError("shattering test points", len(T), MAX_SHATTER_POINTS)
    for labels in product((0, 1), repeat=len(T)):
        if budget is not None:
            budget.charge()
        if not consistent(C, T, labels):
            return labels
    return None


def is_shattered(C: FunctionClass, T: Sequence[Point]) -> bool:
    """True iff all 2^|T| labellings of T are consistent with C."""
    return first_unrealized_labelling(C, T) is None


# ========== VC / LVC ==========

def vc_dim_with_certificate(C: FunctionClass, S: FiniteDomain) -> Tuple[int, Optional[Certificate]]:
    """
    VC dimension of C on S, searching sizes upward. Only subsets whose every
    one-smaller subset is shattered are tested at the next size.

    The certificate is the first candidate of size vc+1 and its first
    unrealized labelling (None when all of S is shattered or no candidate exists).
    """
    points = S.points
    budget = _CallBudget("vc_dim oracle calls")
    shattered: Set[Tuple[int, ...]] = {()}
    vc = 0
    certificate: Optional[Certificate] = None
    for k in range(1, len(points) + 1):
        level: Set[Tuple[int, ...]] = set()
        first_failure: Optional[Certificate] = None
        for subset in _extensions(shattered, len(points)):
            if any(subset[:i] + subset[i + 1:] not in shattered for i in range(k)):
                continue
            bad = first_unrealized_labelling(C, [points[i] for i in subset], budget)
            if bad is None:
                level.add(subset)
            elif first_failure is None:
                first_failure = Certificate(tuple(points[i] for i in subset), bad)
        logger.debug(f"🔄 vc_dim nivel {k}: {len(level)} subconjuntos pulverizados")
        if not level:
            certificate = first_failure
            break
        vc = k
        shattered = level
    return vc, certificate


def _extensions(family: Set[Tuple[int, ...]], n: int) -> List[Tuple[int, ...]]:
    candidates = {s + (j,) for s in family for j in range((s[-1] + 1) if s else 0, n)}
    return sorted(candidates)


def vc_dim(C: FunctionClass, S: FiniteDomain) -> int:
    return vc_dim_with_certificate(C, S)[0]


def lvc_dim_with_certificate(C: FunctionClass, S: FiniteDomain) -> Tuple[int, Optional[Certificate]]:
    """
    Largest k such that every size-k subset of S is shattered, trying
    k = 1, 2, … and stopping at the first subset that fails.
    """
    points = S.points
    budget = _CallBudget("lvc_dim oracle calls")
    for k in range(1, len(points) + 1):
        for subset in combinations(range(len(points)), k):
            T = [points[i] for i in subset]
            bad = first_unrealized_labelling(C, T, budget)
            if bad is not None:
                logger.debug(f"🔄 lvc_dim: falla en tamaño {k} con {subset}")
                return k - 1, Certificate(tuple(T), bad)
    return len(points), None


@lru_cache(maxsize=256)
def _cached_lvc(C: FunctionClass, S: FiniteDomain) -> Tuple[int, Optional[Certificate]]:
    return lvc_dim_with_certificate(C, S)


def lvc_dim(C: FunctionClass, S: FiniteDomain) -> int:
    return _cached_lvc(C, S)[0]


def cached_lvc_with_certificate(C: FunctionClass, S: FiniteDomain) -> Tuple[int, Optional[Certificate]]:
    return _cached_lvc(C, S)


# ========== CRECIMIENTO Y NÚMERO DE PULVERIZACIÓN ==========

def consistent_labellings(C: FunctionClass, S: FiniteDomain) -> Set[int]:
    """
    All labellings of S realizable by C, as bitmasks (bit i ↔ point i).

    Built point by point: a prefix labelling that is already inconsistent is
    never extended, so the oracle is called at most 2·|S|·growth times.
    """
    points = S.points
    if len(points) > MAX_GROWTH_POINTS:
        raise BudgetExceededError("growth enumeration points", len(points), MAX_GROWTH_POINTS)
    budget = _CallBudget("growth oracle calls")
    prefixes: List[Tuple[int, ...]] = [()]
    for i in range(len(points)):
        grown = []
        for prefix in prefixes:
            for bit in (0, 1):
                labels = prefix + (bit,)
                budget.charge()
                if consistent(C, points[:i + 1], labels):
                    grown.append(labels)
        prefixes = grown
    return {sum(bit << i for i, bit in enumerate(labels)) for labels in prefixes}


def shattered_subsets(G: Set[int], size: int) -> List[Tuple[int, ...]]:
    """Every subset T of range(size) whose projection of G has 2^|T| patterns."""
    family: Set[Tuple[int, ...]] = {()}
    out: List[Tuple[int, ...]] = [()]
    for k in range(1, size + 1):
        level = set()
        for subset in _extensions(family, size):
            if any(subset[:i] + subset[i + 1:] not in family for i in range(k)):
                continue
            mask = sum(1 << i for i in subset)
            if len({g & mask for g in G}) == 1 << k:
                level.add(subset)
        if not level:
            break
        out.extend(sorted(level))
        family = level
    return out


def growth_and_shattering(C: FunctionClass, S: FiniteDomain) -> Tuple[int, int]:
    """(number of consistent labellings of S, number of shattered subsets of S incl. ∅)."""
    G = consistent_labellings(C, S)
    return len(G), len(shattered_subsets(G, len(S)))


def sauer_bound(size: int, d: int) -> int:
    return sum(comb(size, i) for i in range(d + 1))


def classify_extremal(C: FunctionClass, S: FiniteDomain) -> DimensionReport:
    """Fill a DimensionReport from one enumeration of the consistent labellings of S."""
    size = len(S)
    G = consistent_labellings(C, S)
    family = shattered_subsets(G, size)
    counts = [0] * (size + 1)
    for subset in family:
        counts[len(subset)] += 1
    vc = max(len(s) for s in family)
    lvc = 0
    for k in range(1, size + 1):
        if counts[k] != comb(size, k):
            break
        lvc = k
    growth, sh = len(G), len(family)
    bound = sauer_bound(size, vc)
    report = DimensionReport(
        size=size, vc=vc, lvc=lvc, shattering_number=sh, growth=growth, sauer_bound=bound,
        is_maximum=growth == bound, is_shatter_extremal=growth == sh, lvc_equals_vc=lvc == vc,
    )
    logger.debug(f"📊 {C.spec} en |S|={size}: vc={vc} lvc={lvc} Φ={growth} sh={sh} sauer={bound}")
    return report
