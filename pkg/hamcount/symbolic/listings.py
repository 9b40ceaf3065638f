"""Symbolic listings of graph families and the polynomial identities between them.

Each ``sym_*`` function expands an identity fully over the generic matrix
a(i,j) (and vertex variables x(i) where the construction needs them), so an
equality between two results is an identity of polynomials, not of values.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from hamcount.errors import ContractViolation, UnsupportedDimension, check_cap
from hamcount.oracles.bruteforce import hp_orderings, single_cycle_permutations, tree_monomials
from hamcount.oracles.permutations import cycles_of
from hamcount.settings import settings
from hamcount.symbolic.matrices import (
    edge_matrix, in_degree_matrix, laplacian_matrix, sym_add_diagonal, sym_det, sym_negate,
    sym_per, sym_principal, sym_select,
)
from hamcount.symbolic.poly import Monomial, MultiPoly, partial_derivative, poly_product, poly_sum

logger = logging.getLogger(__name__)


def _cap(cap: Optional[int], default: int) -> int:
    return default if cap is None else cap


def _subsets(items: Sequence[int]) -> Iterable[List[int]]:
    for mask in range(1 << len(items)):
        yield [items[b] for b in range(len(items)) if mask >> b & 1]


def edge_monomial(image: Sequence[int]) -> Monomial:
    """prod_i a(i, f(i)) for the function with 1-indexed image ``image``."""
    edges: Dict[Tuple[int, int], int] = {}
    for i, j in enumerate(image, start=1):
        edges[(i, j)] = edges.get((i, j), 0) + 1
    return Monomial.build(edges)


def _listing(images: Iterable[Sequence[int]]) -> MultiPoly:
    return MultiPoly({edge_monomial(img): 1 for img in images})


# ---------------- Hamiltonian cycles ----------------

def sym_hc_listing(n: int, cap: Optional[int] = None) -> MultiPoly:
    check_cap("sym_hc_listing", n, _cap(cap, settings.SYMBOLIC_CAP))
    return _listing(single_cycle_permutations(n))


@lru_cache(maxsize=8)
def _hc_identity(n: int) -> MultiPoly:
    A = edge_matrix(n)
    vertices = list(range(1, n + 1))
    terms = []
    for S in _subsets(vertices[:-1]):
        rest = [v for v in vertices if v not in S]
        terms.append(sym_det(sym_negate(sym_principal(A, S)), cap=n) * sym_per(sym_principal(A, rest), cap=n))
    out = poly_sum(terms)
    logger.debug("hc identity n=%d expanded to %d monomials", n, len(out))
    return out


def sym_hc_identity_expand(n: int, cap: Optional[int] = None) -> MultiPoly:
    """Sum over S of [n-1] of det(-A_S)*per(A_{[n]\\S}), fully expanded."""
    if n < 1:
        raise UnsupportedDimension("n must be >= 1")
    check_cap("sym_hc_identity_expand", n, _cap(cap, settings.IDENTITY_CAP))
    return _hc_identity(n)


def sym_coeff_profile(n: int, sigma: Sequence[int], cap: Optional[int] = None) -> int:
    """Coefficient of the edge monomial of ``sigma`` in the expanded cycle identity."""
    if sorted(sigma) != list(range(1, n + 1)):
        raise ContractViolation(f"{list(sigma)} is not a permutation of [1..{n}]")
    return sym_hc_identity_expand(n, cap).coefficient(edge_monomial(sigma))


def cycle_refinement_coefficient(sigma: Sequence[int]) -> int:
    """The same coefficient counted combinatorially.

    M_sigma shows up in the S-term exactly when S is a union of cycles of
    sigma avoiding vertex n, with sign (-1)^|S| * sgn(sigma restricted to S).
    """
    n = len(sigma)
    free = [c for c in cycles_of(sigma) if n not in c]
    total = 0
    for k in range(len(free) + 1):
        for chosen in combinations(free, k):
            size = sum(len(c) for c in chosen)
            restricted_sign = 1
            for c in chosen:
                if (len(c) - 1) & 1:
                    restricted_sign = -restricted_sign
            total += (-1) ** size * restricted_sign
    return total


# ---------------- Rooted trees ----------------

def sym_tdmtt(n: int, cap: Optional[int] = None) -> MultiPoly:
    """sum_i a(i,i) * det(diag(A·1) - A) with row and column i removed."""
    check_cap("sym_tdmtt", n, _cap(cap, settings.SYMBOLIC_CAP))
    L = laplacian_matrix(n)
    terms = []
    for i in range(1, n + 1):
        keep = [v for v in range(1, n + 1) if v != i]
        terms.append(MultiPoly.edge(i, i) * sym_det(sym_principal(L, keep), cap=n))
    return poly_sum(terms)


def sym_tree_listing(n: int, cap: Optional[int] = None) -> MultiPoly:
    """Rooted functional trees enumerated directly, one monomial each."""
    return MultiPoly({Monomial.build(dict.fromkeys(edges, 1)): 1 for edges in tree_monomials(n, cap)})


# ---------------- Derivative construction ----------------

def _rooted_in_degree_form(n: int, root: int) -> MultiPoly:
    # (sum_j a(root,j) x(j)) * det(diag(Ax) - A diag(x)) over [n] minus root
    M = in_degree_matrix(n)
    keep = [v for v in range(1, n + 1) if v != root]
    lead = poly_sum(MultiPoly.edge(root, j) * MultiPoly.vertex(j) for j in range(1, n + 1))
    return lead * sym_det(sym_principal(M, keep), cap=max(n, 1))


def sym_hc_derivative_form(n: int, root: Optional[int] = None, cap: Optional[int] = None) -> MultiPoly:
    """d_[n] of the in-degree-tracked unicyclic listing rooted at ``root`` (default n)."""
    if n < 1:
        raise UnsupportedDimension("n must be >= 1")
    check_cap("sym_hc_derivative_form", n, _cap(cap, settings.DERIVATIVE_CAP))
    root = n if root is None else root
    if not 1 <= root <= n:
        raise ContractViolation(f"root {root} out of range [1..{n}]")
    return partial_derivative(_rooted_in_degree_form(n, root), range(1, n + 1))


def sym_hc_all_roots_form(n: int, cap: Optional[int] = None) -> MultiPoly:
    """The same construction summed over every root; each cycle appears once per root, so this is n * P_HC."""
    if n < 1:
        raise UnsupportedDimension("n must be >= 1")
    check_cap("sym_hc_all_roots_form", n, _cap(cap, settings.DERIVATIVE_CAP))
    total = poly_sum(_rooted_in_degree_form(n, r) for r in range(1, n + 1))
    return partial_derivative(total, range(1, n + 1))


# ---------------- Hamiltonian paths ----------------

def sym_hp_listing(n: int, cap: Optional[int] = None) -> MultiPoly:
    """One monomial per functional (i,j)-path: a(vn,vn) * prod a(vk,vk+1)."""
    if n < 2:
        raise UnsupportedDimension(f"path listings need n >= 2, got n={n}")
    check_cap("sym_hp_listing", n, _cap(cap, settings.SYMBOLIC_CAP))
    out: Dict[Monomial, int] = {}
    for order in hp_orderings(n, cap=n):
        edges = {(a, b): 1 for a, b in zip(order, order[1:])}
        edges[(order[-1], order[-1])] = 1
        m = Monomial.build(edges)
        out[m] = out.get(m, 0) + 1
    return MultiPoly(out)


def sym_hp_identity_expand(n: int, cap: Optional[int] = None) -> MultiPoly:
    """sum over i != j and {i,j} <= T of a(j,j) det(-A)_{[n]\\T} per(A)_{T\\{j},T\\{i}}."""
    if n < 2:
        raise UnsupportedDimension(f"path identity needs n >= 2, got n={n}")
    check_cap("sym_hp_identity_expand", n, _cap(cap, settings.IDENTITY_CAP))
    A = edge_matrix(n)
    vertices = list(range(1, n + 1))
    terms = []
    for i in vertices:
        for j in vertices:
            if i == j:
                continue
            rest = [v for v in vertices if v not in (i, j)]
            for extra in _subsets(rest):
                T = sorted([i, j] + extra)
                outside = [v for v in vertices if v not in T]
                d = sym_det(sym_negate(sym_principal(A, outside)), cap=n)
                p = sym_per(sym_select(A, [v for v in T if v != j], [v for v in T if v != i]), cap=n)
                terms.append(MultiPoly.edge(j, j) * d * p)
    return poly_sum(terms)


def sym_hp_derivative_form(n: int, cap: Optional[int] = None) -> MultiPoly:
    """sum over i, j of a(j,j) * d_{[n]\\{i}} det(diag(Ax) - A diag(x))_{[n]\\{j}}."""
    if n < 2:
        raise UnsupportedDimension(f"path derivative form needs n >= 2, got n={n}")
    check_cap("sym_hp_derivative_form", n, _cap(cap, settings.DERIVATIVE_CAP))
    M = in_degree_matrix(n)
    vertices = list(range(1, n + 1))
    terms = []
    for j in vertices:
        minor = sym_det(sym_principal(M, [v for v in vertices if v != j]), cap=n)
        loop = MultiPoly.edge(j, j)
        for i in vertices:
            terms.append(loop * partial_derivative(minor, [v for v in vertices if v != i]))
    return poly_sum(terms)


# ---------------- Determinant sum lemma ----------------

def sym_det_sum_lemma_check(n: int, cap: Optional[int] = None) -> bool:
    """det(A + diag(x)) == sum over S of det(A_S) * prod_{i not in S} x(i), as polynomials."""
    check_cap("sym_det_sum_lemma_check", n, _cap(cap, settings.SYMBOLIC_CAP))
    A = edge_matrix(n)
    vertices = list(range(1, n + 1))
    lhs = sym_det(sym_add_diagonal(A, [MultiPoly.vertex(i) for i in vertices]), cap=n)
    rhs = poly_sum(
        sym_det(sym_principal(A, S), cap=n) * poly_product(MultiPoly.vertex(i) for i in vertices if i not in S)
        for S in _subsets(vertices)
    )
    return lhs == rhs


# ---------------- Product rule and in-degree bookkeeping ----------------

def product_rule_check(p: MultiPoly, q: MultiPoly, n: int) -> bool:
    """d_[n](p*q) == sum over S of [n] of d_S p * d_{[n]\\S} q."""
    vertices = list(range(1, n + 1))
    lhs = partial_derivative(p * q, vertices)
    rhs = poly_sum(
        partial_derivative(p, S) * partial_derivative(q, [v for v in vertices if v not in S])
        for S in _subsets(vertices)
    )
    return lhs == rhs


def track_in_degrees(p: MultiPoly) -> MultiPoly:
    """Change of variable a(i,j) <- a(i,j) * x(j)."""
    out: Dict[Monomial, int] = {}
    for m, c in p.terms.items():
        verts = m.vertex_map()
        for (_, j), e in m.edges:
            verts[j] = verts.get(j, 0) + e
        tracked = Monomial.build(m.edge_map(), verts)
        out[tracked] = out.get(tracked, 0) + c
    return MultiPoly(out)


def in_degree_sequence(m: Monomial, n: int) -> Tuple[int, ...]:
    deg = [0] * n
    for (_, j), e in m.edges:
        deg[j - 1] += e
    return tuple(deg)
