"""Fan a subset sum out over worker processes.

A term function has the signature ``fn(rows, lo, hi) -> int`` and sums the
terms whose index lies in ``[lo, hi)``. Integer addition is exact, so the
partitioning never changes the result.
"""
from concurrent.futures import ProcessPoolExecutor
import logging
from typing import Callable, List, Tuple

from hamcount.linalg.matrix import Rows
from hamcount.settings import settings

logger = logging.getLogger(__name__)

TermRange = Callable[[Rows, int, int], int]

# Below this many terms a pool costs more than it saves.
_MIN_PARALLEL_TERMS = 64


def partition(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most ``parts`` contiguous, non-empty ranges."""
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for k in range(parts):
        hi = lo + step + (1 if k < extra else 0)
        if hi > lo:
            out.append((lo, hi))
        lo = hi
    return out


def subset_sum(fn: TermRange, rows: Rows, total: int, threads: int = 1) -> int:
    if threads <= 1 or total < _MIN_PARALLEL_TERMS:
        return fn(rows, 0, total)
    chunks = partition(total, threads * settings.PARALLEL_CHUNKS_PER_WORKER)
    logger.debug("fanning %d terms over %d workers in %d chunks", total, threads, len(chunks))
    with ProcessPoolExecutor(max_workers=threads) as ex:
        futures = [ex.submit(fn, rows, lo, hi) for lo, hi in chunks]
        # Reduce in submission order; the sum is order-independent anyway.
        return sum(f.result() for f in futures)
