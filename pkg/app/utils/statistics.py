import math
from typing import Tuple

from app.utils.constants import DEFAULT_WILSON_Z


def wilson_interval(successes: int, trials: int, z: float = DEFAULT_WILSON_Z) -> Tuple[float, float]:
    """Wilson score interval for a binomial proportion; (0, 1) when trials == 0."""
    if trials <= 0:
        return 0.0, 1.0
    p = successes / trials
    z2 = z * z
    denom = 1 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def mean_ci(values, z: float = DEFAULT_WILSON_Z) -> Tuple[float, float]:
    """Normal-approximation interval for a sample mean."""
    n = len(values)
    if n == 0:
        return 0.0, 0.0
    m = sum(values) / n
    var = sum(v * v for v in values) / n - m * m
    half = z * math.sqrt(max(var, 0.0)) / math.sqrt(n)
    return m - half, m + half
