"""Brute-force ground truth for every identity.

Each oracle enumerates permutations, orderings or functions outright and
shares no algorithm with the module it checks. They refuse to run above their
cap instead of running for hours. The enumerated families depend only on n;
small ones are built once per n and reused across matrices.
"""
from __future__ import annotations

from functools import lru_cache, wraps
from math import prod
from typing import Callable, Iterable, Optional, Tuple, TypeVar

from hamcount.errors import UnsupportedDimension, check_cap
from hamcount.linalg.matrix import SquareMatrix
from hamcount.oracles.permutations import (
    EdgeFunction, functions, is_single_cycle, permutation_sign, permutations_lex,
)
from hamcount.settings import settings

Image = Tuple[int, ...]
T = TypeVar("T")


def _perm_cap(cap: Optional[int]) -> int:
    return settings.BRUTE_CAP if cap is None else cap


# Families up to these sizes are held in memory and shared across calls; larger
# ones (9! orderings, 8^7 trees) are streamed afresh on every call.
PERMUTATIONS_CACHED_UP_TO = 8
TREES_CACHED_UP_TO = 7


def _family(limit: int) -> Callable[[Callable[[int], Iterable[T]]], Callable[[int], Iterable[T]]]:
    def wrap(build: Callable[[int], Iterable[T]]) -> Callable[[int], Iterable[T]]:
        cached = lru_cache(maxsize=limit + 1)(lambda n: tuple(build(n)))

        @wraps(build)
        def family(n: int) -> Iterable[T]:
            return cached(n) if n <= limit else build(n)

        family.cache_info = cached.cache_info  # type: ignore[attr-defined]
        return family
    return wrap


@_family(PERMUTATIONS_CACHED_UP_TO)
def signed_permutations(n: int) -> Iterable[Tuple[int, Image]]:
    return ((permutation_sign(p), p) for p in permutations_lex(n))


@_family(PERMUTATIONS_CACHED_UP_TO)
def single_cycle_permutations(n: int) -> Iterable[Image]:
    return (p for p in permutations_lex(n) if is_single_cycle(p))


@_family(PERMUTATIONS_CACHED_UP_TO)
def _orderings(n: int) -> Iterable[Image]:
    return permutations_lex(n)


@_family(TREES_CACHED_UP_TO)
def _tree_images(n: int) -> Iterable[Image]:
    return (f.image for f in functions(n) if f.is_functional_tree())


def functional_trees(n: int, cap: Optional[int] = None) -> Tuple[EdgeFunction, ...]:
    check_cap("functional_trees", n, settings.FUNCTION_CAP if cap is None else cap)
    return tuple(EdgeFunction(n, image) for image in _tree_images(n))


def _monomial(rows, image: Image) -> int:
    return prod(rows[i][image[i] - 1] for i in range(len(image)))


def det_leibniz(A: SquareMatrix, cap: Optional[int] = None) -> int:
    check_cap("det_leibniz", A.n, _perm_cap(cap))
    rows = A.rows()
    return sum(sign * _monomial(rows, p) for sign, p in signed_permutations(A.n))


def per_leibniz(A: SquareMatrix, cap: Optional[int] = None) -> int:
    check_cap("per_leibniz", A.n, _perm_cap(cap))
    rows = A.rows()
    return sum(_monomial(rows, p) for _, p in signed_permutations(A.n))


def hc_bruteforce(A: SquareMatrix, cap: Optional[int] = None) -> int:
    """Sum of edge monomials over single-cycle permutations."""
    if A.n < 1:
        raise UnsupportedDimension("hc_bruteforce needs n >= 1")
    check_cap("hc_bruteforce", A.n, _perm_cap(cap))
    rows = A.rows()
    return sum(_monomial(rows, p) for p in single_cycle_permutations(A.n))


def hp_bruteforce(A: SquareMatrix, cap: Optional[int] = None) -> int:
    """Sum over orderings (v1..vn) of a_{vn,vn} * prod a_{vk,vk+1}."""
    if A.n < 2:
        raise UnsupportedDimension(f"hp_bruteforce needs n >= 2, got n={A.n}")
    check_cap("hp_bruteforce", A.n, _perm_cap(cap))
    rows = A.rows()
    total = 0
    for order in _orderings(A.n):
        last = order[-1] - 1
        weight = rows[last][last]
        for a, b in zip(order, order[1:]):
            weight *= rows[a - 1][b - 1]
        total += weight
    return total


def tree_bruteforce(A: SquareMatrix, cap: Optional[int] = None) -> int:
    """Sum of edge monomials over functions whose graph is a rooted functional tree."""
    if A.n < 1:
        raise UnsupportedDimension("tree_bruteforce needs n >= 1")
    check_cap("tree_bruteforce", A.n, settings.FUNCTION_CAP if cap is None else cap)
    rows = A.rows()
    return sum(_monomial(rows, image) for image in _tree_images(A.n))


def tree_monomials(n: int, cap: Optional[int] = None) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Edge sets ((1, f(1)), ..., (n, f(n))) of every rooted functional tree on [n]."""
    check_cap("tree_monomials", n, settings.FUNCTION_CAP if cap is None else cap)
    return tuple(tuple(enumerate(image, start=1)) for image in _tree_images(n))


def hp_orderings(n: int, cap: Optional[int] = None) -> Iterable[Image]:
    """Vertex orderings (v1..vn); ordering k is the path v1 -> ... -> vn rooted at vn."""
    if n < 2:
        raise UnsupportedDimension(f"hp_orderings needs n >= 2, got n={n}")
    check_cap("hp_orderings", n, _perm_cap(cap))
    return _orderings(n)
