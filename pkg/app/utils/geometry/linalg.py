"""Exact rank and determinants for integer / rational matrices."""
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from app.utils.constants import RANK_PRIME


def fraction_rank(rows: Sequence[Sequence]) -> int:
    matrix: List[List[Fraction]] = [[Fraction(v) for v in row] for row in rows]
    if not matrix:
        return 0
    n_cols = len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        p = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            f = matrix[r][col]
            if f != 0:
                factor = f / p
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def modular_rank(rows: Sequence[Sequence[int]], prime: int = RANK_PRIME) -> int:
    """Rank over GF(prime); a lower bound for the rank over Q."""
    mat = np.asarray(rows, dtype=np.int64) % prime
    if mat.size == 0:
        return 0
    n_rows, n_cols = mat.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nonzero = np.nonzero(mat[rank:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
        inv = pow(int(mat[rank, col]), prime - 2, prime)
        mat[rank] = (mat[rank] * inv) % prime
        below = mat[rank + 1:, col].copy()
        if below.any():
            mat[rank + 1:] = (mat[rank + 1:] - np.outer(below, mat[rank]) % prime) % prime
        rank += 1
    return rank


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """
    Rank over Q of an integer matrix.

    Full rank modulo a prime implies full rank over Q; only the rare deficient
    case falls back to exact rational elimination.
    """
    if not rows:
        return 0
    full = min(len(rows), len(rows[0]))
    r = modular_rank(rows)
    if r == full:
        return r
    return fraction_rank(rows)


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col]
            if f != 0:
                factor = f / p
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det
