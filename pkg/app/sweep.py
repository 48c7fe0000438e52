"""
Monte-Carlo sample-size sweeps.

A sweep runs, for every m in the grid and both instance sides, `trials`
independent (generate instance, run tester) trials and records the
acceptance rate with a Wilson interval. Trials fan out over a thread pool;
each trial's seed is derived from (seed, side, m, trial), so the records do
not depend on the number of threads or on completion order.

Generators (SweepConfig.generator):
    monotone-chain:n=64                 monotone vs ⌊εn⌋+1 leading ones on a chain
    ssd:domain=line,size=20             SSD reduction instances for SweepConfig.class_spec
    symmetric:n=1000                    ⌊n/5⌋ ones vs 2n/5 ones
    junta:n=8,k=2                       random k-junta vs random function, uniform cube
    lp:n=6                              lp_hard_instance yes / no
    birthday:d=400                      uniform support d vs 3d
"""
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.classes import Poset, parse_class_spec, parse_spec_string
from app.core import FiniteDistribution, FiniteDomain, Labelling, full_cube_domain, sample_indices
from app.dimension import lvc_dim, vc_dim
from app.hardness import lp_hard_instance, ssd_instance, ssd_parameters
from app.instance_io import parse_domain_spec
from app.testers import (
    TesterConfig, bipartite_monotone_test, bipartite_reduce, birthday_ssd, junta_test, lp_feasibility_test,
    one_sided_vc_test, symmetric_test,
)
from app.utils.config.config_constants import KIND_POSET, SIDE_NO, SIDE_YES, SUPPORT_SMALL
from app.utils.config.settings import get_default_seed, get_threads
from app.utils.constants import DEFAULT_TARGET, MIN_SWEEP_TRIALS, SYMMETRIC_FRACTION
from app.utils.error_handler import SpecParseError
from app.utils.logger_config import get_logger
from app.utils.metrics import TRIALS
from app.utils.rng import derive_seed, make_rng
from app.utils.statistics import wilson_interval

logger = get_logger()

SIDES = (SIDE_YES, SIDE_NO)


class SweepConfig(BaseModel):
    class_spec: Optional[str] = None
    generator: str
    eps: float = Field(gt=0.0, lt=1.0)
    grid: List[int]
    trials: int
    target: float = Field(default=DEFAULT_TARGET, gt=0.0, lt=1.0)
    seed: int = Field(default_factory=get_default_seed)
    threads: int = Field(default_factory=get_threads, ge=1)

    @field_validator("grid")
    @classmethod
    def grid_strictly_increasing(cls, grid: List[int]) -> List[int]:
        if not grid:
            raise ValueError("grid must not be empty")
        if any(m < 1 for m in grid):
            raise ValueError("grid values must be ≥ 1")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError(f"grid must be strictly increasing, got {grid}")
        return grid

    @field_validator("trials")
    @classmethod
    def enough_trials(cls, trials: int) -> int:
        if trials < MIN_SWEEP_TRIALS:
            raise ValueError(f"trials must be ≥ {MIN_SWEEP_TRIALS}, got {trials}")
        return trials


class ExperimentRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    class_name: str = Field(alias="class")
    params: str
    n: int
    vc: Optional[int] = None
    lvc: Optional[int] = None
    eps: float
    m: int
    trials: int
    accept_rate: float = Field(ge=0.0, le=1.0)
    ci_low: float = Field(ge=0.0, le=1.0)
    ci_high: float = Field(ge=0.0, le=1.0)
    seed: int

    @model_validator(mode="after")
    def interval_contains_rate(self):
        if not self.ci_low - 1e-12 <= self.accept_rate <= self.ci_high + 1e-12:
            raise ValueError(f"interval [{self.ci_low}, {self.ci_high}] misses rate {self.accept_rate}")
        return self

    @property
    def side(self) -> Optional[str]:
        for item in self.params.split(";"):
            key, _, value = item.partition("=")
            if key == "side":
                return value
        return None


@dataclass
class Scenario:
    """A tester paired with its yes/no instance generators; `trial` returns the accept bit."""
    class_name: str
    params: str
    n: int
    vc: Optional[int]
    lvc: Optional[int]
    trial: Callable[[str, int, int], bool]


@dataclass
class SweepResult:
    records: List[ExperimentRecord]
    minimal_m: Optional[int]


# ========== ESCENARIOS ==========

def _int(params: Dict[str, str], key: str, default: Optional[int] = None) -> int:
    if key in params:
        return int(params[key])
    if default is None:
        raise SpecParseError(f"generator needs {key}=")
    return default


def _monotone_chain(params, cfg: SweepConfig) -> Scenario:
    n = _int(params, "n", 64)
    P = Poset.chain(n)
    domain = FiniteDomain(tuple(range(n)), KIND_POSET)
    D = FiniteDistribution.uniform(domain)
    r = int(cfg.eps * n) + 1
    yes = Labelling(domain, tuple(int(i >= n // 2) for i in range(n)))
    no = Labelling(domain, tuple(int(i < r) for i in range(n)))
    reduced = {side: bipartite_reduce(P, D, f) for side, f in ((SIDE_YES, yes), (SIDE_NO, no))}

    def trial(side: str, m: int, seed: int) -> bool:
        B, q, g = reduced[side]
        return bipartite_monotone_test(B, q, g, m, seed).accept

    return Scenario("monotone", f"poset=chain;n={n}", n, 1, 1, trial)


def _ssd(params, cfg: SweepConfig) -> Scenario:
    if not cfg.class_spec:
        raise SpecParseError("the ssd generator needs class_spec")
    C = parse_class_spec(cfg.class_spec)
    domain_kind = params.get("domain", "line")
    rest = ",".join(f"{k}={v}" for k, v in params.items() if k != "domain")
    S = parse_domain_spec(f"{domain_kind}:{rest}")
    vc, lvc = vc_dim(C, S), lvc_dim(C, S)
    ssd = ssd_parameters(vc, lvc, len(S))

    def trial(side: str, m: int, seed: int) -> bool:
        inst = ssd_instance(C, S, side, ssd, seed)
        D = inst.pushforward
        idx = sample_indices(D, m, derive_seed(seed, 1))
        labelled = [(D.domain.points[i], inst.f.values[i]) for i in idx]
        return one_sided_vc_test(C, labelled, TesterConfig(epsilon=cfg.eps, m=m, seed=seed)).accept

    return Scenario(C.kind, C.params_string, len(S), vc, lvc, trial)


def _symmetric(params, cfg: SweepConfig) -> Scenario:
    n = _int(params, "n", 1000)
    t = n // SYMMETRIC_FRACTION
    ones = {SIDE_YES: t, SIDE_NO: 2 * n // SYMMETRIC_FRACTION}

    def trial(side: str, m: int, seed: int) -> bool:
        rng = make_rng(derive_seed(seed, 1))
        chosen = set(int(i) for i in rng.choice(n, size=ones[side], replace=False))
        f = lambda i: int(i in chosen)  # noqa: E731
        return symmetric_test(n, f, TesterConfig(epsilon=cfg.eps, m=m, seed=seed)).accept

    return Scenario("symmetric", f"t={t}", n, t, t, trial)


def _junta(params, cfg: SweepConfig) -> Scenario:
    n, k = _int(params, "n", 8), _int(params, "k", 2)
    domain = full_cube_domain(n)
    D = FiniteDistribution.uniform(domain)

    def trial(side: str, m: int, seed: int) -> bool:
        rng = make_rng(derive_seed(seed, 1))
        if side == SIDE_YES:
            J = sorted(int(j) for j in rng.choice(n, size=k, replace=False))
            table = rng.integers(0, 2, size=2 ** k)
            values = tuple(int(table[int("".join(str(p[j]) for j in J) or "0", 2)]) for p in domain.points)
        else:
            values = tuple(int(b) for b in rng.integers(0, 2, size=len(domain)))
        f = Labelling(domain, values)
        idx = sample_indices(D, m, seed)
        labelled = [(domain.points[i], f.values[i]) for i in idx]
        return junta_test(n, k, labelled, TesterConfig(epsilon=cfg.eps, m=m, s=1, seed=seed)).accept

    return Scenario("junta", f"k={k}", n, None, None, trial)


def _lp(params, cfg: SweepConfig) -> Scenario:
    n = _int(params, "n", 6)

    def trial(side: str, m: int, seed: int) -> bool:
        instance = lp_hard_instance(n, side, seed)
        return lp_feasibility_test(instance.constraints,
                                   TesterConfig(epsilon=cfg.eps, m=m, seed=derive_seed(seed, 1))).accept

    return Scenario("lp", f"dim={n}", n, n + 1, n + 1, trial)


def _birthday(params, cfg: SweepConfig) -> Scenario:
    d = _int(params, "d", 400)
    supports = {SIDE_YES: d, SIDE_NO: 3 * d}

    def trial(side: str, m: int, seed: int) -> bool:
        rng = make_rng(seed)
        return birthday_ssd(rng.integers(0, supports[side], size=m).tolist(), d) == SUPPORT_SMALL

    return Scenario("birthday", f"d={d}", d, None, None, trial)


SCENARIOS: Dict[str, Callable[[Dict[str, str], SweepConfig], Scenario]] = {
    "monotone-chain": _monotone_chain,
    "ssd": _ssd,
    "symmetric": _symmetric,
    "junta": _junta,
    "lp": _lp,
    "birthday": _birthday,
}


def build_scenario(cfg: SweepConfig) -> Scenario:
    kind, params = parse_spec_string(cfg.generator)
    factory = SCENARIOS.get(kind)
    if factory is None:
        raise SpecParseError(f"unknown generator {kind!r}; available: {sorted(SCENARIOS)}")
    return factory(params, cfg)


# ========== BARRIDO ==========

def _run_cell(scenario: Scenario, side: str, side_index: int, m: int, trials: int, seed: int) -> int:
    return sum(int(scenario.trial(side, m, derive_seed(seed, side_index, m, t))) for t in range(trials))


def sweep(cfg: SweepConfig) -> SweepResult:
    """
    Records per (side, m), yes side first, m ascending, and the smallest m
    whose yes-side acceptance and no-side rejection both have Wilson lower
    bound ≥ target.
    """
    start = time.time()
    scenario = build_scenario(cfg)
    logger.info(f"🔄 Sweep {cfg.generator} ({scenario.class_name}) | grid={cfg.grid} | trials={cfg.trials} | threads={cfg.threads}")

    cells = [(side_index, side, m) for side_index, side in enumerate(SIDES) for m in cfg.grid]
    accepted: Dict[Tuple[str, int], int] = {}
    with ThreadPoolExecutor(max_workers=cfg.threads, thread_name_prefix="lvc-trial") as executor:
        futures = {
            executor.submit(_run_cell, scenario, side, side_index, m, cfg.trials, cfg.seed): (side, m)
            for side_index, side, m in cells
        }
        for future in as_completed(futures):
            side, m = futures[future]
            try:
                accepted[(side, m)] = future.result()
            except Exception as e:
                logger.error(f"❌ Sweep cell side={side} m={m} failed: {e}")
                raise
    TRIALS.labels(experiment="sweep").inc(len(cells) * cfg.trials)

    records = []
    for _, side, m in cells:
        count = accepted[(side, m)]
        low, high = wilson_interval(count, cfg.trials)
        records.append(ExperimentRecord(**{
            "class": scenario.class_name,
            "params": f"{scenario.params};side={side}",
            "n": scenario.n, "vc": scenario.vc, "lvc": scenario.lvc, "eps": cfg.eps, "m": m,
            "trials": cfg.trials, "accept_rate": count / cfg.trials, "ci_low": low, "ci_high": high,
            "seed": cfg.seed,
        }))
    minimal = minimal_m(records, cfg.target)
    logger.info(f"📊 Sweep terminado en {time.time() - start:.2f}s | m mínimo = {minimal}")
    return SweepResult(records=records, minimal_m=minimal)


def minimal_m(records: List[ExperimentRecord], target: float = DEFAULT_TARGET) -> Optional[int]:
    """Smallest m with yes ci_low ≥ target and no-side rejection lower bound (1 − ci_high) ≥ target."""
    yes = {r.m: r for r in records if r.side == SIDE_YES}
    no = {r.m: r for r in records if r.side == SIDE_NO}
    for m in sorted(set(yes) & set(no)):
        if yes[m].ci_low >= target and 1 - no[m].ci_high >= target:
            return m
    return None
