"""Permutation and function enumeration primitives.

Images are 1-indexed tuples: ``perm[i-1]`` is sigma(i).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from hamcount.errors import ContractViolation


def next_permutation(p: List[int]) -> bool:
    """Advance ``p`` in place to its lexicographic successor; False after the last one."""
    k = len(p) - 2
    while k >= 0 and p[k] >= p[k + 1]:
        k -= 1
    if k < 0:
        return False
    l = len(p) - 1
    while p[l] <= p[k]:
        l -= 1
    p[k], p[l] = p[l], p[k]
    p[k + 1:] = reversed(p[k + 1:])
    return True


def permutations_lex(n: int) -> Iterator[Tuple[int, ...]]:
    p = list(range(1, n + 1))
    yield tuple(p)
    while next_permutation(p):
        yield tuple(p)


def cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * (len(perm) + 1)
    cycles = 0
    for start in range(1, len(perm) + 1):
        if seen[start]:
            continue
        cycles += 1
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v - 1]
    return cycles


def permutation_sign(perm: Sequence[int]) -> int:
    return -1 if (len(perm) - cycle_count(perm)) & 1 else 1


def is_single_cycle(perm: Sequence[int]) -> bool:
    """Iterate sigma from vertex 1; one cycle iff all n vertices are visited before returning."""
    n = len(perm)
    v, steps = perm[0], 1
    while v != 1:
        v = perm[v - 1]
        steps += 1
        if steps > n:
            return False
    return steps == n


def cycles_of(perm: Sequence[int]) -> List[List[int]]:
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc, v = [], start
        while v not in seen:
            seen.add(v)
            cyc.append(v)
            v = perm[v - 1]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class EdgeFunction:
    """A function f: [n] -> [n]; its graph has out-degree 1 everywhere by construction."""

    n: int
    image: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.image) != self.n or any(not 1 <= v <= self.n for v in self.image):
            raise ContractViolation(f"{self.image} is not a function on [1..{self.n}]")

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, self.image[i - 1]) for i in range(1, self.n + 1)]

    def fixed_points(self) -> List[int]:
        return [i for i in range(1, self.n + 1) if self.image[i - 1] == i]

    def is_functional_tree(self) -> bool:
        """Exactly one fixed point r, and iterating f from any vertex reaches r."""
        fixed = self.fixed_points()
        if len(fixed) != 1:
            return False
        root = fixed[0]
        reaches = {root}
        for start in range(1, self.n + 1):
            path, v = [], start
            while v not in reaches and v not in path:
                path.append(v)
                v = self.image[v - 1]
            if v not in reaches:
                return False  # closed a cycle away from the root
            reaches.update(path)
        return True


def functions(n: int) -> Iterator[EdgeFunction]:
    for image in product(range(1, n + 1), repeat=n):
        yield EdgeFunction(n, image)
