"""Exact counting identities for Hamiltonian cycles, Hamiltonian paths and
rooted functional trees.

All three are evaluated as signed subset sums of determinant/permanent
minors. Vertex n plays the distinguished role in the cycle identity: only
subsets S of [n-1] are summed, so n always lies on the permanent side.
"""
from __future__ import annotations

import logging
import time
from typing import Dict, Optional, Sequence

from hamcount.errors import ContractViolation, DimensionMismatch, UnsupportedDimension
from hamcount.identities.pool import subset_sum
from hamcount.linalg.kernels import det_rows, mask_indices, per_rows, select
from hamcount.linalg.matrix import IndexSet, Rows, SquareMatrix
from hamcount.schemas import CountReport
from hamcount.settings import settings

logger = logging.getLogger(__name__)


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def _threads(threads: Optional[int]) -> int:
    t = settings.THREADS if threads is None else threads
    if t < 1:
        raise ContractViolation(f"threads must be >= 1, got {t}")
    return t


# ---------------- Hamiltonian cycles ----------------

def _hc_terms(rows: Rows, lo: int, hi: int) -> int:
    n = len(rows)
    full = (1 << n) - 1
    total = 0
    for mask in range(lo, hi):
        s_idx = mask_indices(mask)
        d = det_rows(select(rows, s_idx, s_idx))
        if d == 0:
            continue
        if len(s_idx) & 1:
            d = -d
        c_idx = mask_indices(full & ~mask)
        total += d * per_rows(select(rows, c_idx, c_idx))
    return total


def hc_count_identity(A: SquareMatrix, threads: Optional[int] = None) -> CountReport:
    """P_HC(A) = sum over S of [n-1] of det(-A_S) * per(A_{[n]\\S})."""
    if A.n < 1:
        raise UnsupportedDimension("the cycle identity needs n >= 1")
    start = time.perf_counter()
    terms = 1 << (A.n - 1)
    count = subset_sum(_hc_terms, A.rows(), terms, _threads(threads))
    logger.debug("hc identity n=%d terms=%d", A.n, terms)
    return CountReport(n=A.n, method="hc_identity", count=count, terms_evaluated=terms, elapsed_ms=_ms(start))


def full_range_cancellation_sum(A: SquareMatrix) -> int:
    """Same summand as the cycle identity but over every S of [n]; always 0 for n >= 1."""
    rows = A.rows()
    return _hc_terms(rows, 0, 1 << A.n) if A.n else 1


# ---------------- Hamiltonian paths ----------------

def _hp_pairs(n: int):
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def _hp_terms(rows: Rows, lo: int, hi: int) -> int:
    # term index k = pair_index * 2^(n-2) + submask over the n-2 other vertices
    n = len(rows)
    pairs = _hp_pairs(n)
    width = n - 2
    full = (1 << n) - 1
    minors: Dict[int, int] = {}  # det(-A) over [n]\T, keyed by the bitmask of [n]\T
    total = 0
    for k in range(lo, hi):
        i, j = pairs[k >> width]
        loop = rows[j][j]
        if loop == 0:
            continue
        rest = [v for v in range(n) if v != i and v != j]
        sub = k & ((1 << width) - 1)
        t_mask = 1 << i | 1 << j
        for b in range(width):
            if sub >> b & 1:
                t_mask |= 1 << rest[b]
        out_mask = full & ~t_mask
        d = minors.get(out_mask)
        if d is None:
            outside = mask_indices(out_mask)
            d = det_rows(select(rows, outside, outside))
            if len(outside) & 1:
                d = -d
            minors[out_mask] = d
        if d == 0:
            continue
        in_t = mask_indices(t_mask)
        t_rows = [v for v in in_t if v != j]
        t_cols = [v for v in in_t if v != i]
        total += loop * d * per_rows(select(rows, t_rows, t_cols))
    return total


def hp_count_identity(A: SquareMatrix, threads: Optional[int] = None) -> CountReport:
    """Weighted count of functional (i,j)-paths, each carrying its root loop a_{jj}.

    Only ordered pairs i != j are summed; the i == j terms vanish for n >= 2
    (see :func:`hp_diagonal_terms_sum`).
    """
    if A.n < 2:
        raise UnsupportedDimension(f"the path identity needs n >= 2, got n={A.n}")
    start = time.perf_counter()
    terms = A.n * (A.n - 1) << (A.n - 2)
    count = subset_sum(_hp_terms, A.rows(), terms, _threads(threads))
    logger.debug("hp identity n=%d terms=%d", A.n, terms)
    return CountReport(n=A.n, method="hp_identity", count=count, terms_evaluated=terms, elapsed_ms=_ms(start))


def hp_diagonal_terms_sum(A: SquareMatrix) -> int:
    """The i == j terms of the path identity, summed. Zero for n >= 2."""
    rows = A.rows()
    n = A.n
    total = 0
    for i in range(n):
        others = [v for v in range(n) if v != i]
        for sub in range(1 << len(others)):
            t_rest = [others[b] for b in range(len(others)) if sub >> b & 1]
            outside = [v for v in others if v not in t_rest]
            d = det_rows(select(rows, outside, outside))
            if len(outside) & 1:
                d = -d
            total += rows[i][i] * d * per_rows(select(rows, t_rest, t_rest))
    return total


# ---------------- Rooted trees (directed matrix-tree theorem) ----------------

def laplacian(A: SquareMatrix) -> SquareMatrix:
    """diag(A·1) - A. The loop a_kk cancels on the diagonal: L_kk = sum_{j != k} a_kj."""
    rows = A.rows()
    out = [[-v for v in row] for row in rows]
    for k, row in enumerate(rows):
        out[k][k] = sum(row) - row[k]
    return SquareMatrix.from_rows(out)


def _rooted_minor(lap: Rows, root: int) -> int:
    keep = [v for v in range(len(lap)) if v != root]
    return det_rows(select(lap, keep, keep))


def tree_count_rooted(A: SquareMatrix, root: int) -> int:
    """a_{root,root} * det(L with row and column ``root`` removed); ``root`` is 1-indexed."""
    if not 1 <= root <= A.n:
        raise ContractViolation(f"root {root} out of range [1..{A.n}]")
    loop = A[root, root]
    if loop == 0:
        return 0
    return loop * _rooted_minor(laplacian(A).rows(), root - 1)


def tree_count_tdmtt(A: SquareMatrix) -> CountReport:
    if A.n < 1:
        raise UnsupportedDimension("the tree count needs n >= 1")
    start = time.perf_counter()
    lap = laplacian(A).rows()
    count = 0
    for i in range(A.n):
        loop = A[i + 1, i + 1]
        if loop:
            count += loop * _rooted_minor(lap, i)
    return CountReport(n=A.n, method="tree_tdmtt", count=count, terms_evaluated=A.n, elapsed_ms=_ms(start))


# ---------------- Determinant sum lemma ----------------

def det_sum_expand(A: SquareMatrix, x: Sequence[int], universe: IndexSet) -> int:
    """Sum over S of U of det(A_S) * prod_{i in U\\S} x_i, with U = ``universe``.

    ``x`` lists one value per member of U, in increasing index order. The
    result equals det(A_U + diag(x)).
    """
    if universe.universe != A.n:
        raise ContractViolation(f"universe [1..{universe.universe}] does not match n={A.n}")
    members = [i - 1 for i in universe]
    if len(x) != len(members):
        raise DimensionMismatch(f"x has {len(x)} entries, universe has {len(members)}")
    rows = A.rows()
    total = 0
    for sub in range(1 << len(members)):
        s_idx = [members[b] for b in range(len(members)) if sub >> b & 1]
        weight = 1
        for b in range(len(members)):
            if not sub >> b & 1:
                weight *= x[b]
        if weight:
            total += det_rows(select(rows, s_idx, s_idx)) * weight
    return total
