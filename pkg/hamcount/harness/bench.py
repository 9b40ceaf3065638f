"""Identity vs. brute-force timing across a range of n."""
from __future__ import annotations

import logging
import time
from typing import List

from tqdm import tqdm

from hamcount.identities.counting import hc_count_identity
from hamcount.linalg.matrix import random_matrix
from hamcount.oracles.bruteforce import hc_bruteforce
from hamcount.schemas import BenchRow, RunConfig
from hamcount.settings import settings

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 10


def run_bench(config: RunConfig) -> List[BenchRow]:
    max_n = config.max_n or DEFAULT_MAX_N
    rows: List[BenchRow] = []
    for n in tqdm(range(config.min_n, max_n + 1), desc="bench", unit="n", disable=None):
        A = random_matrix(n, config.seed + n, settings.ENTRY_BOUND)
        report = hc_count_identity(A, threads=config.threads)
        brute_ms, agree = None, None
        if n <= config.caps.brute:
            start = time.perf_counter()
            brute = hc_bruteforce(A, cap=config.caps.brute)
            brute_ms = (time.perf_counter() - start) * 1000.0
            agree = brute == report.count
            if not agree:
                logger.warning("bench n=%d seed=%d: identity %d != oracle %d", n, config.seed + n, report.count, brute)
        rows.append(BenchRow(
            n=n, count=report.count, terms_evaluated=report.terms_evaluated,
            identity_ms=report.elapsed_ms, brute_ms=brute_ms, agree=agree,
        ))
    return rows
