"""Fraction-free (Bareiss) row reduction over Q(sqrt(p)).

Pivots are units of Q[sqrt(p)]: rationals, rational multiples of sqrt(p), or
elements of non-zero norm.  Every update divides by the previous pivot, and
the division is exact.
"""
from typing import List, Sequence, Tuple

from app.errors import CertificationError
from app.quad import QuadScalar


def _pick_pivot(m: List[List[QuadScalar]], start: int, col: int):
    fallback = None
    for r in range(start, len(m)):
        entry = m[r][col]
        if entry.is_zero():
            continue
        if entry.is_pure() or entry.norm():
            return r
        fallback = r
    if fallback is not None:
        raise CertificationError(f"Only zero-divisor pivots available in column {col}")
    return None


def echelon_form(matrix: Sequence[Sequence[QuadScalar]]) -> Tuple[List[List[QuadScalar]], List[int]]:
    """Bareiss forward elimination on a copy; returns the echelon matrix and its non-pivot columns

    For a square matrix of full rank the last pivot is the determinant, up to the sign of the row swaps.
    """
    m = [list(row) for row in matrix]
    if not m:
        return m, []
    n_cols = len(m[0])
    free = []
    piv_r = 0
    previous = None
    for piv_c in range(n_cols):
        i_row = _pick_pivot(m, piv_r, piv_c)
        if i_row is None:
            free.append(piv_c)
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        pivot = m[piv_r][piv_c]
        for r in range(piv_r + 1, len(m)):
            lead = m[r][piv_c]
            for c in range(piv_c + 1, n_cols):
                value = pivot * m[r][c] - lead * m[piv_r][c]
                m[r][c] = value if previous is None else value / previous
            m[r][piv_c] = QuadScalar(0, 0, pivot.p)
        previous = pivot
        piv_r += 1
    return m, free


def free_columns(matrix: Sequence[Sequence[QuadScalar]]) -> List[int]:
    return echelon_form(matrix)[1]


def rank(matrix: Sequence[Sequence[QuadScalar]], n_cols: int) -> int:
    if not matrix:
        return 0
    return n_cols - len(free_columns(matrix))


def nullity(matrix: Sequence[Sequence[QuadScalar]], n_cols: int) -> int:
    return n_cols - rank(matrix, n_cols)
