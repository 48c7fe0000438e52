"""
Minimum enclosing ball in R^d.

Support-set pivoting on the dual problem
    minimise |Σ λ_i y_i|² − Σ λ_i |y_i|²   over the simplex,
whose optimum puts the center at Σ λ_i y_i with λ supported on boundary
points. The working set W holds the candidate boundary points; each round
either moves λ toward the circumcenter of W (dropping a point whose weight
hits zero) or, once λ is optimal on W, admits the farthest outside point.
This is the boundary-support recursion of Welzl's algorithm unrolled into an
active-set loop, which stays cheap in dimension 30 where the recursive form
explodes.
"""
from typing import List, Sequence, Tuple

import numpy as np

from app.utils.constants import MEB_MAX_ITERATIONS_FACTOR
from app.utils.error_handler import DegenerateInputError
from app.utils.logger_config import get_logger

logger = get_logger()

_STEP_TOL = 1e-13
_SINGULAR_TOL = 1e-12


def min_enclosing_ball(points: Sequence[Sequence[float]]) -> Tuple[np.ndarray, float]:
    """
    Smallest ball containing all points.

    Args:
        points: m points of equal dimension d (m ≥ 1)

    Returns:
        (center as a length-d array, radius)

    Raises:
        DegenerateInputError: on an empty point list
    """
    X = np.asarray(points, dtype=float)
    if X.size == 0:
        raise DegenerateInputError("min_enclosing_ball needs at least one point")
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    m, _ = X.shape
    if m == 1:
        return X[0].copy(), 0.0

    shift = X.mean(axis=0)
    Y = X - shift
    sq = np.einsum("ij,ij->i", Y, Y)

    W: List[int] = [int(np.argmax(sq))]
    lam = np.zeros(m)
    lam[W[0]] = 1.0
    max_iter = MEB_MAX_ITERATIONS_FACTOR * (m + Y.shape[1]) + 50

    for _ in range(max_iter):
        target, null_dir = _solve_on_working_set(Y, W)

        if null_dir is not None:
            # affinely dependent W: slide along the null direction until a weight hits zero
            if null_dir @ sq[W] < 0:
                null_dir = -null_dir
            lam_w = lam[W]
            neg = np.nonzero(null_dir < -_STEP_TOL)[0]
            if neg.size == 0:
                null_dir = -null_dir
                neg = np.nonzero(null_dir < -_STEP_TOL)[0]
            ratios = lam_w[neg] / -null_dir[neg]
            block = int(neg[int(np.argmin(ratios))])
            lam[W] = np.maximum(lam_w + ratios.min() * null_dir, 0.0)
            lam[W[block]] = 0.0
            W.pop(block)
            continue

        lam_w = lam[W]
        p = target - lam_w
        if np.max(np.abs(p)) <= _STEP_TOL:
            lam[W] = np.maximum(target, 0.0)
            center = lam @ Y
            dists = np.einsum("ij,ij->i", Y - center, Y - center)
            r2 = dists[W].max()
            j = int(np.argmax(dists))
            if dists[j] <= r2 * (1 + 1e-12) + 1e-15 or j in W:
                return _finish(X, center + shift)
            W.append(j)
            continue

        step = 1.0
        block = None
        for idx in np.nonzero(p < 0)[0]:
            ratio = lam_w[idx] / -p[idx]
            if ratio < step:
                step = ratio
                block = int(idx)
        lam[W] = np.maximum(lam_w + step * p, 0.0)
        if block is not None:
            lam[W[block]] = 0.0
            W.pop(block)

    logger.warning("⚠️ min_enclosing_ball: iteration cap reached, returning the current enclosing ball")
    return _finish(X, lam @ Y + shift)


def _solve_on_working_set(Y: np.ndarray, W: List[int]):
    """Circumcenter weights of W inside its affine hull, or a null direction if W is dependent."""
    if len(W) == 1:
        return np.array([1.0]), None
    base = Y[W[0]]
    A = Y[W[1:]] - base
    M = A @ A.T
    singular_values = np.linalg.svd(M, compute_uv=False)
    if singular_values[-1] <= _SINGULAR_TOL * max(singular_values[0], 1e-300):
        _, _, vt = np.linalg.svd(A.T)
        u = vt[-1]
        return None, np.concatenate(([-u.sum()], u))
    rhs = 0.5 * np.einsum("ij,ij->i", A, A)
    alpha = np.linalg.solve(M, rhs)
    return np.concatenate(([1.0 - alpha.sum()], alpha)), None


def _finish(X: np.ndarray, center: np.ndarray) -> Tuple[np.ndarray, float]:
    radius = float(np.sqrt(np.max(np.einsum("ij,ij->i", X - center, X - center))))
    return center, radius


def enclosing_radius(points: Sequence[Sequence[float]]) -> float:
    return min_enclosing_ball(points)[1]
