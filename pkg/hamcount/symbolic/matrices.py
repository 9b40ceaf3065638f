"""Symbolic matrices (entries are MultiPoly) and their Leibniz expansions."""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from hamcount.errors import check_cap
from hamcount.oracles.bruteforce import signed_permutations
from hamcount.settings import settings
from hamcount.symbolic.poly import Monomial, MultiPoly, poly_sum

SymMatrix = List[List[MultiPoly]]


def edge_matrix(n: int) -> SymMatrix:
    """The generic matrix A with entry (i,j) the variable a(i,j)."""
    return [[MultiPoly.edge(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def sym_select(M: SymMatrix, rows: Sequence[int], cols: Sequence[int]) -> SymMatrix:
    """Rows and columns by 1-indexed position, in the order given."""
    return [[M[r - 1][c - 1] for c in cols] for r in rows]


def sym_principal(M: SymMatrix, idx: Sequence[int]) -> SymMatrix:
    return sym_select(M, idx, idx)


def sym_negate(M: SymMatrix) -> SymMatrix:
    return [[-e for e in row] for row in M]


def sym_add_diagonal(M: SymMatrix, diag: Sequence[MultiPoly]) -> SymMatrix:
    out = [list(row) for row in M]
    for k, d in enumerate(diag):
        out[k][k] = out[k][k] + d
    return out


def in_degree_matrix(n: int) -> SymMatrix:
    """diag(A·x) - A·diag(x) over [n]: entry (i,k) is delta_ik * sum_j a(i,j)x(j) - a(i,k)x(k).

    On the diagonal the a(i,i)x(i) terms cancel.
    """
    out: SymMatrix = []
    for i in range(1, n + 1):
        row = []
        for k in range(1, n + 1):
            if i == k:
                row.append(poly_sum(MultiPoly.edge(i, j) * MultiPoly.vertex(j) for j in range(1, n + 1) if j != i))
            else:
                row.append(-(MultiPoly.edge(i, k) * MultiPoly.vertex(k)))
        out.append(row)
    return out


def laplacian_matrix(n: int) -> SymMatrix:
    """diag(A·1) - A; loops cancel on the diagonal."""
    out: SymMatrix = []
    for i in range(1, n + 1):
        row = []
        for k in range(1, n + 1):
            if i == k:
                row.append(poly_sum(MultiPoly.edge(i, j) for j in range(1, n + 1) if j != i))
            else:
                row.append(-MultiPoly.edge(i, k))
        out.append(row)
    return out


def _leibniz(M: SymMatrix, signed: bool) -> MultiPoly:
    n = len(M)
    if n == 0:
        return MultiPoly.constant(1)
    acc: Dict[Monomial, int] = {}
    for sign, perm in signed_permutations(n):
        entries = [M[i][perm[i] - 1] for i in range(n)]
        if any(e.is_zero() for e in entries):
            continue
        partial: Dict[Monomial, int] = {Monomial(): sign if signed else 1}
        for e in entries:
            nxt: Dict[Monomial, int] = {}
            for m1, c1 in partial.items():
                for m2, c2 in e.terms.items():
                    m = m1 * m2
                    nxt[m] = nxt.get(m, 0) + c1 * c2
            partial = nxt
        for m, c in partial.items():
            acc[m] = acc.get(m, 0) + c
    return MultiPoly(acc)


def sym_det(M: SymMatrix, cap: Optional[int] = None) -> MultiPoly:
    check_cap("sym_det", len(M), settings.SYMBOLIC_CAP if cap is None else cap)
    return _leibniz(M, signed=True)


def sym_per(M: SymMatrix, cap: Optional[int] = None) -> MultiPoly:
    check_cap("sym_per", len(M), settings.SYMBOLIC_CAP if cap is None else cap)
    return _leibniz(M, signed=False)
