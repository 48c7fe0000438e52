"""
In-process Prometheus counters.

The registry is private so repeated imports in tests never collide with the
global default registry. `main.py --metrics-out FILE` dumps it in text format.
"""
from prometheus_client import CollectorRegistry, Counter, generate_latest

REGISTRY = CollectorRegistry(auto_describe=True)

ORACLE_CALLS = Counter(
    "lvc_oracle_calls",
    "Consistency oracle evaluations",
    ["class_kind"],
    registry=REGISTRY,
)

TESTER_VERDICTS = Counter(
    "lvc_tester_verdicts",
    "Tester runs by outcome",
    ["tester", "outcome"],
    registry=REGISTRY,
)

TRIALS = Counter(
    "lvc_trials",
    "Monte-Carlo trials executed",
    ["experiment"],
    registry=REGISTRY,
)


def record_verdict(tester: str, accept: bool) -> None:
    TESTER_VERDICTS.labels(tester=tester, outcome="accept" if accept else "reject").inc()


def write_metrics(path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(generate_latest(REGISTRY))
