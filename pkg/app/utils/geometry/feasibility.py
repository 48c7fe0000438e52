"""
Exact linear feasibility over the rationals.

`find_feasible_point(rows, rhs, dim)` decides whether A·y ≥ b has a solution
with y free, using a dense Phase-I simplex over `Fraction` with Bland's rule
(terminates without cycling). The answer is exact: no tolerances anywhere.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Number = object  # int | Fraction | float (floats are converted exactly)


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _dedupe(rows: Sequence[Sequence], rhs: Sequence) -> Tuple[List[Tuple[Fraction, ...]], List[Fraction]]:
    seen = {}
    for row, b in zip(rows, rhs):
        key = (tuple(_frac(a) for a in row), _frac(b))
        seen.setdefault(key, None)
    out_rows = [k[0] for k in seen]
    out_rhs = [k[1] for k in seen]
    return out_rows, out_rhs


def find_feasible_point(rows: Sequence[Sequence], rhs: Sequence, dim: int) -> Optional[List[Fraction]]:
    """
    Solve A·y ≥ b for free y ∈ Q^dim.

    Args:
        rows: constraint coefficient vectors, each of length dim
        rhs: right-hand sides
        dim: number of variables

    Returns:
        A feasible point as a list of Fractions, or None when infeasible.
    """
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs differ in length")
    A, b = _dedupe(rows, rhs)
    for row in A:
        if len(row) != dim:
            raise ValueError(f"constraint of length {len(row)} in a {dim}-variable system")
    if not A:
        return [Fraction(0)] * dim

    # Trivially decided rows
    for row, bi in zip(A, b):
        if not any(row) and bi > 0:
            return None

    m = len(A)
    # columns: u (dim) | v (dim) | s (m) | artificials | rhs
    need_art = [bi > 0 for bi in b]
    art_index = {}
    n_art = 0
    for i, flag in enumerate(need_art):
        if flag:
            art_index[i] = n_art
            n_art += 1
    n_cols = 2 * dim + m + n_art
    rhs_col = n_cols
    zero = Fraction(0)
    one = Fraction(1)

    table: List[List[Fraction]] = []
    basis: List[int] = []
    for i in range(m):
        row = [zero] * (n_cols + 1)
        if need_art[i]:
            for j in range(dim):
                row[j] = A[i][j]
                row[dim + j] = -A[i][j]
            row[2 * dim + i] = -one
            row[2 * dim + m + art_index[i]] = one
            row[rhs_col] = b[i]
            basis.append(2 * dim + m + art_index[i])
        else:
            # −A·y + s = −b with −b ≥ 0: the slack is a feasible basic variable
            for j in range(dim):
                row[j] = -A[i][j]
                row[dim + j] = A[i][j]
            row[2 * dim + i] = one
            row[rhs_col] = -b[i]
            basis.append(2 * dim + i)
        table.append(row)

    first_art = 2 * dim + m
    # Phase-I reduced costs: minimise the sum of artificials
    obj = [zero] * (n_cols + 1)
    for i in range(m):
        if need_art[i]:
            for j in range(n_cols + 1):
                if j < first_art or j == rhs_col:
                    obj[j] -= table[i][j]

    while True:
        entering = next((j for j in range(n_cols) if obj[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(m):
            a = table[i][entering]
            if a > 0:
                ratio = table[i][rhs_col] / a
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leaving])):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            # unbounded in Phase I cannot happen (objective bounded below by 0)
            break
        _pivot(table, obj, leaving, entering)
        basis[leaving] = entering

    if obj[rhs_col] != 0:
        return None

    values = [zero] * n_cols
    for i, var in enumerate(basis):
        values[var] = table[i][rhs_col]
    return [values[j] - values[dim + j] for j in range(dim)]


def _pivot(table: List[List[Fraction]], obj: List[Fraction], r: int, c: int) -> None:
    pivot_row = table[r]
    piv = pivot_row[c]
    if piv != 1:
        table[r] = pivot_row = [v / piv for v in pivot_row]
    nz = [j for j, v in enumerate(pivot_row) if v != 0]
    for i, row in enumerate(table):
        if i == r:
            continue
        f = row[c]
        if f != 0:
            for j in nz:
                row[j] -= f * pivot_row[j]
    f = obj[c]
    if f != 0:
        for j in nz:
            obj[j] -= f * pivot_row[j]


def is_feasible(rows: Sequence[Sequence], rhs: Sequence, dim: int) -> bool:
    return find_feasible_point(rows, rhs, dim) is not None


def find_strict_point(rows: Sequence[Sequence], rhs: Sequence, dim: int) -> Optional[List[Fraction]]:
    """
    Solve the strict system A·y > b.

    Homogenised as A·y' − b·t ≥ 1, t ≥ 1; a solution maps back to y = y'/t.
    """
    lifted = [tuple(_frac(a) for a in row) + (-_frac(bi),) for row, bi in zip(rows, rhs)]
    lifted_rhs = [Fraction(1)] * len(lifted)
    lifted.append(tuple([Fraction(0)] * dim) + (Fraction(1),))
    lifted_rhs.append(Fraction(1))
    point = find_feasible_point(lifted, lifted_rhs, dim + 1)
    if point is None:
        return None
    t = point[-1]
    return [v / t for v in point[:-1]]
