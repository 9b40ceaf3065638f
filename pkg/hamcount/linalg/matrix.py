"""Dense exact-integer square matrices and subset bitmasks.

The public surface is 1-indexed (``A[i, j]`` is a_{i,j}); storage is a flat
row-major tuple of Python ints, so arithmetic never overflows or rounds.
"""
from __future__ import annotations

from dataclasses import dataclass
import random
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from hamcount.errors import ContractViolation, DimensionMismatch

Rows = List[List[int]]


@dataclass(frozen=True)
class SquareMatrix:
    n: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ContractViolation(f"matrix dimension must be >= 0, got {self.n}")
        entries = tuple(self.entries)
        for k, e in enumerate(entries):
            # bool is an int subclass but never a weight
            if isinstance(e, bool) or not isinstance(e, int):
                raise ContractViolation(f"entry {k} is {type(e).__name__} {e!r}; only exact integers are accepted")
        if len(entries) != self.n * self.n:
            raise DimensionMismatch(f"expected {self.n * self.n} entries for n={self.n}, found {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SquareMatrix":
        n = len(rows)
        for r, row in enumerate(rows, start=1):
            if len(row) != n:
                raise DimensionMismatch(f"row {r} has {len(row)} entries, expected {n}")
        return cls(n, tuple(v for row in rows for v in row))

    def _check(self, i: int, j: int) -> None:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ContractViolation(f"index ({i},{j}) out of range for n={self.n}")

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        self._check(i, j)
        return self.entries[(i - 1) * self.n + (j - 1)]

    def row(self, i: int) -> Tuple[int, ...]:
        self._check(i, 1)
        return self.entries[(i - 1) * self.n:i * self.n]

    def rows(self) -> Rows:
        """0-indexed mutable copy, the working form of the kernels."""
        n = self.n
        return [list(self.entries[k * n:(k + 1) * n]) for k in range(n)]

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entries[k * self.n + k] for k in range(self.n))

    def transpose(self) -> "SquareMatrix":
        n = self.n
        return SquareMatrix(n, tuple(self.entries[j * n + i] for i in range(n) for j in range(n)))

    def with_diagonal(self, values: Union[int, Sequence[int]]) -> "SquareMatrix":
        diag = [values] * self.n if isinstance(values, int) else list(values)
        if len(diag) != self.n:
            raise DimensionMismatch(f"diagonal needs {self.n} values, got {len(diag)}")
        rows = self.rows()
        for k, v in enumerate(diag):
            rows[k][k] = v
        return SquareMatrix.from_rows(rows)

    def permuted(self, perm: Sequence[int]) -> "SquareMatrix":
        """P·A·Pᵀ for the permutation with 1-indexed image ``perm``: b_{ij} = a_{perm(i),perm(j)}."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ContractViolation(f"{list(perm)} is not a permutation of [1..{self.n}]")
        return SquareMatrix.from_rows([[self[p, q] for q in perm] for p in perm])

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix(self.n, tuple(-e for e in self.entries))

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if other.n != self.n:
            raise DimensionMismatch(f"cannot add {self.n}x{self.n} and {other.n}x{other.n}")
        return SquareMatrix(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))


@dataclass(frozen=True)
class IndexSet:
    """Subset of [1..universe]; bit k-1 set means index k is a member."""

    bits: int
    universe: int

    def __post_init__(self) -> None:
        if self.universe < 0 or self.bits < 0 or self.bits >> self.universe:
            raise ContractViolation(f"bitmask {self.bits:#x} does not fit universe [1..{self.universe}]")

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe: int) -> "IndexSet":
        bits = 0
        for i in indices:
            if not 1 <= i <= universe:
                raise ContractViolation(f"index {i} out of range [1..{universe}]")
            bits |= 1 << (i - 1)
        return cls(bits, universe)

    @classmethod
    def full(cls, universe: int) -> "IndexSet":
        return cls((1 << universe) - 1, universe)

    @classmethod
    def empty(cls, universe: int) -> "IndexSet":
        return cls(0, universe)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        bits, k = self.bits, 1
        while bits:
            if bits & 1:
                yield k
            bits >>= 1
            k += 1

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and 1 <= i <= self.universe and bool(self.bits >> (i - 1) & 1)

    def complement(self) -> "IndexSet":
        return IndexSet(((1 << self.universe) - 1) & ~self.bits, self.universe)

    def without(self, *indices: int) -> "IndexSet":
        return IndexSet(self.bits & ~IndexSet.from_indices(indices, self.universe).bits, self.universe)

    def indices(self) -> List[int]:
        return list(self)


# ---------------- Constructors ----------------

def identity(n: int) -> SquareMatrix:
    return SquareMatrix(n, tuple(int(i == j) for i in range(n) for j in range(n)))


def ones(n: int) -> SquareMatrix:
    return SquareMatrix(n, (1,) * (n * n))


def zeros(n: int) -> SquareMatrix:
    return SquareMatrix(n, (0,) * (n * n))


def complete_digraph(n: int) -> SquareMatrix:
    """All-ones off the diagonal, zero loops."""
    return SquareMatrix(n, tuple(int(i != j) for i in range(n) for j in range(n)))


def diag(values: Sequence[int]) -> SquareMatrix:
    return zeros(len(values)).with_diagonal(values)


def random_matrix(n: int, seed: Union[int, str], bound: int = 9) -> SquareMatrix:
    """Entries uniform in [-bound, bound]; deterministic in (n, seed, bound)."""
    rng = random.Random(seed)
    return SquareMatrix(n, tuple(rng.randint(-bound, bound) for _ in range(n * n)))
