"""Exact determinant, permanent and submatrix extraction.

Two layers: the public functions take :class:`SquareMatrix` / :class:`IndexSet`
and validate; the ``*_rows`` functions work on plain 0-indexed list-of-lists
and are what the subset sums in :mod:`hamcount.identities` call in their
inner loops.
"""
from __future__ import annotations

from math import prod
from operator import add, sub
from typing import List, Sequence

from hamcount.errors import ContractViolation, DimensionMismatch
from hamcount.linalg.matrix import IndexSet, Rows, SquareMatrix


# ---------------- Raw kernels (0-indexed rows) ----------------

def select(rows: Rows, row_idx: Sequence[int], col_idx: Sequence[int]) -> Rows:
    return [[rows[r][c] for c in col_idx] for r in row_idx]


def mask_indices(bits: int) -> List[int]:
    """0-indexed members of a bitmask, increasing."""
    out, k = [], 0
    while bits:
        if bits & 1:
            out.append(k)
        bits >>= 1
        k += 1
    return out


def det_rows(rows: Rows) -> int:
    m = len(rows)
    if m == 0:
        return 1
    if m == 1:
        return rows[0][0]
    if m == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if m == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return _bareiss([list(r) for r in rows])


def _bareiss(m: Rows) -> int:
    # Fraction-free elimination: every division below is exact.
    k = len(m)
    sign, prev = 1, 1
    for p in range(k - 1):
        if m[p][p] == 0:
            swap = next((r for r in range(p + 1, k) if m[r][p] != 0), None)
            if swap is None:
                return 0
            m[p], m[swap] = m[swap], m[p]
            sign = -sign
        rowp = m[p]
        piv = rowp[p]
        for r in range(p + 1, k):
            rowr = m[r]
            f = rowr[p]
            for c in range(p + 1, k):
                rowr[c] = (rowr[c] * piv - f * rowp[c]) // prev
        prev = piv
    return sign * m[k - 1][k - 1]


def per_rows(rows: Rows) -> int:
    """Ryser's formula, Nijenhuis–Wilf form, Gray-code order.

    Sums over subsets Q of the first m-1 columns only. Row offsets are doubled
    (y_i = 2*a_{i,m} - row_sum_i) so the whole sum stays integral; the result
    is divided exactly by 2^(m-1) at the end.
    """
    m = len(rows)
    if m == 0:
        return 1
    if m == 1:
        return rows[0][0]
    if m == 2:
        return rows[0][0] * rows[1][1] + rows[0][1] * rows[1][0]
    last = m - 1
    cols = [[2 * row[j] for row in rows] for j in range(last)]
    sums = [2 * row[last] - sum(row) for row in rows]
    total = prod(sums)
    gray = 0
    for k in range(1, 1 << last):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        col = cols[j]
        sums = list(map(add if gray >> j & 1 else sub, sums, col))
        # |Q| parity follows k parity under the reflected Gray code
        if k & 1:
            total -= prod(sums)
        else:
            total += prod(sums)
    if last & 1:
        total = -total
    return total // (1 << last)


# ---------------- Public API (1-indexed) ----------------

def _check_universe(A: SquareMatrix, S: IndexSet, what: str) -> None:
    if S.universe != A.n:
        raise ContractViolation(f"{what} index set universe {S.universe} does not match n={A.n}")


def principal_submatrix(A: SquareMatrix, S: IndexSet) -> SquareMatrix:
    _check_universe(A, S, "principal")
    idx = mask_indices(S.bits)
    return SquareMatrix.from_rows(select(A.rows(), idx, idx))


def submatrix(A: SquareMatrix, rows: IndexSet, cols: IndexSet) -> SquareMatrix:
    _check_universe(A, rows, "row")
    _check_universe(A, cols, "column")
    if len(rows) != len(cols):
        raise DimensionMismatch(f"|rows|={len(rows)} != |cols|={len(cols)}")
    return SquareMatrix.from_rows(select(A.rows(), mask_indices(rows.bits), mask_indices(cols.bits)))


def det(A: SquareMatrix) -> int:
    """Exact determinant; det of the 0x0 matrix is 1."""
    return det_rows(A.rows())


def per(A: SquareMatrix) -> int:
    """Exact permanent; per of the 0x0 matrix is 1."""
    return per_rows(A.rows())
