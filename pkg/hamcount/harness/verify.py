"""The verification suite behind ``hamcount verify``.

``CHECKS`` is the dispatch table: each entry names a property, the range of n
it is meaningful for, and which cap (if any) bounds it further. Random checks
draw matrices from a seeded PRNG; case k at size n uses seed
``base_seed + n * 100000 + k`` and that seed is reported on failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
import logging
import random
import time
from typing import Callable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from hamcount.identities.counting import (
    det_sum_expand, full_range_cancellation_sum, hc_count_identity, hp_count_identity,
    hp_diagonal_terms_sum, tree_count_rooted, tree_count_tdmtt,
)
from hamcount.io.parsing import parse_matrix, render_matrix
from hamcount.linalg.kernels import det, per
from hamcount.linalg.matrix import IndexSet, SquareMatrix, diag, random_matrix
from hamcount.oracles.bruteforce import (
    det_leibniz, hc_bruteforce, hp_bruteforce, per_leibniz, signed_permutations, tree_bruteforce,
)
from hamcount.oracles.permutations import is_single_cycle
from hamcount.schemas import Caps, CheckFailure, CheckResult, RunConfig, VerifyReport
from hamcount.settings import settings
from hamcount.symbolic.listings import (
    cycle_refinement_coefficient, sym_coeff_profile, sym_det_sum_lemma_check, sym_hc_all_roots_form,
    sym_hc_derivative_form, sym_hc_identity_expand, sym_hc_listing, sym_hp_derivative_form,
    sym_hp_identity_expand, sym_hp_listing, sym_tdmtt, sym_tree_listing,
)
from hamcount.symbolic.matrices import edge_matrix, sym_det, sym_per

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class Context:
    samples: int
    seed: int
    bound: int
    caps: Caps

    def case_seed(self, n: int, k: int) -> int:
        return self.seed + n * 100000 + k

    def matrices(self, n: int, limit: Optional[int] = None) -> Iterator[Tuple[int, SquareMatrix]]:
        count = self.samples if limit is None else min(self.samples, limit)
        for k in range(count):
            s = self.case_seed(n, k)
            yield s, random_matrix(n, s, self.bound)


Outcome = Iterator[Optional[CheckFailure]]  # one item per case; None means the case passed


# ---------------- numeric checks ----------------

def _det_per_vs_leibniz(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=100):
        got, want = (det(A), per(A)), (det_leibniz(A, cap=n), per_leibniz(A, cap=n))
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"(det, per) {got} != Leibniz {want}")


def _hc_oracle(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n):
        got, want = hc_count_identity(A, threads=1).count, hc_bruteforce(A, cap=n)
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"identity {got} != oracle {want}")


def _hp_oracle(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n):
        got, want = hp_count_identity(A, threads=1).count, hp_bruteforce(A, cap=n)
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"identity {got} != oracle {want}")


def _tree_oracle(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n):
        got, want = tree_count_tdmtt(A).count, tree_bruteforce(A, cap=n)
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"tdmtt {got} != oracle {want}")


def _rooted_trees_sum(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=200):
        got = sum(tree_count_rooted(A, r) for r in range(1, n + 1))
        want = tree_count_tdmtt(A).count
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"sum of rooted counts {got} != {want}")


def _full_range_cancellation(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=200):
        got = full_range_cancellation_sum(A)
        yield None if got == 0 else CheckFailure(n=n, seed=s, detail=f"full-range sum is {got}, expected 0")


def _diagonal_independence(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=200):
        B = A.with_diagonal(random_matrix(n, s + 1, ctx.bound).diagonal())
        got, want = hc_count_identity(B, threads=1).count, hc_count_identity(A, threads=1).count
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"diagonal change moved count {want} -> {got}")


def _relabel_invariance(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=200):
        perm = list(range(1, n + 1))
        random.Random(s).shuffle(perm)
        want = hc_count_identity(A, threads=1).count
        got = hc_count_identity(A.permuted(perm), threads=1).count
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"relabeling by {perm} moved count {want} -> {got}")


def _transpose_invariance(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=200):
        want = hc_count_identity(A, threads=1).count
        got = hc_count_identity(A.transpose(), threads=1).count
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"transpose moved count {want} -> {got}")


def _hp_diagonal_terms(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=200):
        got = hp_diagonal_terms_sum(A)
        yield None if got == 0 else CheckFailure(n=n, seed=s, detail=f"i == j terms sum to {got}, expected 0")


def _det_sum_lemma(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=200):
        x = random_matrix(n, s + 1, ctx.bound).diagonal()
        got = det_sum_expand(A, x, IndexSet.full(n))
        want = det(A + diag(x))
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"subset expansion {got} != det {want}")


def _parse_round_trip(n: int, ctx: Context) -> Outcome:
    for s, A in ctx.matrices(n, limit=100):
        yield None if parse_matrix(render_matrix(A)) == A else CheckFailure(n=n, seed=s, detail="render/parse changed the matrix")


# ---------------- symbolic checks ----------------

def _sym_hc_identity(n: int, ctx: Context) -> Outcome:
    expanded, listing = sym_hc_identity_expand(n, cap=ctx.caps.identity), sym_hc_listing(n, cap=ctx.caps.symbolic)
    if expanded != listing:
        yield CheckFailure(n=n, detail=f"expansion has {len(expanded)} monomials, listing has {len(listing)}")
    elif len(listing) != factorial(n - 1):
        yield CheckFailure(n=n, detail=f"{len(listing)} monomials, expected {factorial(n - 1)}")
    else:
        yield None


def _sym_coeff_profile(n: int, ctx: Context) -> Outcome:
    for _, sigma in signed_permutations(n):
        want = 1 if is_single_cycle(sigma) else 0
        got = (sym_coeff_profile(n, sigma, cap=ctx.caps.identity), cycle_refinement_coefficient(sigma))
        yield None if got == (want, want) else CheckFailure(n=n, detail=f"sigma={sigma}: (expanded, counted) {got} != {want}")


def _sym_tdmtt(n: int, ctx: Context) -> Outcome:
    got = sym_tdmtt(n, cap=ctx.caps.symbolic)
    want = sym_tree_listing(n, cap=ctx.caps.function)
    yield None if got == want else CheckFailure(n=n, detail=f"tdmtt expansion has {len(got)} monomials, trees {len(want)}")


def _sym_hc_derivative(n: int, ctx: Context) -> Outcome:
    listing = sym_hc_listing(n, cap=ctx.caps.symbolic)
    for root in range(1, n + 1):
        got = sym_hc_derivative_form(n, root=root, cap=ctx.caps.derivative)
        yield None if got == listing else CheckFailure(n=n, detail=f"derivative form rooted at {root} differs from listing")


def _sym_all_roots(n: int, ctx: Context) -> Outcome:
    got = sym_hc_all_roots_form(n, cap=ctx.caps.derivative)
    want = sym_hc_listing(n, cap=ctx.caps.symbolic).scale(n)
    yield None if got == want else CheckFailure(n=n, detail="all-roots form is not n times the listing")


def _sym_hp(n: int, ctx: Context) -> Outcome:
    listing = sym_hp_listing(n, cap=ctx.caps.symbolic)
    yield None if sym_hp_identity_expand(n, cap=ctx.caps.identity) == listing else CheckFailure(
        n=n, detail="path identity expansion differs from listing")
    yield None if sym_hp_derivative_form(n, cap=ctx.caps.derivative) == listing else CheckFailure(
        n=n, detail="path derivative form differs from listing")


def _sym_det_sum(n: int, ctx: Context) -> Outcome:
    yield None if sym_det_sum_lemma_check(n, cap=ctx.caps.symbolic) else CheckFailure(
        n=n, detail="det(A + diag(x)) differs from its subset expansion")


def _evaluation(n: int, ctx: Context) -> Outcome:
    E = edge_matrix(n)
    d, p = sym_det(E, cap=ctx.caps.symbolic), sym_per(E, cap=ctx.caps.symbolic)
    for s, A in ctx.matrices(n, limit=20):
        got, want = (d.evaluate(A), p.evaluate(A)), (det(A), per(A))
        yield None if got == want else CheckFailure(n=n, seed=s, detail=f"symbolic {got} != numeric {want}")


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int, Context], Outcome]
    lo: int
    hi: int
    cap: Optional[str] = None  # Caps field that also bounds n


CHECKS: Tuple[Check, ...] = (
    Check("det_per_vs_leibniz", _det_per_vs_leibniz, 1, 7, "brute"),
    Check("hc_identity_vs_oracle", _hc_oracle, 1, 8, "brute"),
    Check("hp_identity_vs_oracle", _hp_oracle, 2, 7, "brute"),
    Check("tdmtt_vs_oracle", _tree_oracle, 1, 6, "function"),
    Check("rooted_trees_sum", _rooted_trees_sum, 1, 7),
    Check("full_range_cancellation", _full_range_cancellation, 1, 7),
    Check("hc_diagonal_independence", _diagonal_independence, 2, 7),
    Check("hc_relabel_invariance", _relabel_invariance, 1, 7),
    Check("hc_transpose_invariance", _transpose_invariance, 1, 7),
    Check("hp_diagonal_terms_vanish", _hp_diagonal_terms, 2, 6),
    Check("det_sum_lemma", _det_sum_lemma, 1, 6),
    Check("parse_round_trip", _parse_round_trip, 1, 8),
    Check("sym_hc_identity", _sym_hc_identity, 1, 5, "identity"),
    Check("sym_coeff_profile", _sym_coeff_profile, 1, 5, "identity"),
    Check("sym_tdmtt", _sym_tdmtt, 1, 5, "symbolic"),
    Check("sym_hc_derivative", _sym_hc_derivative, 2, 4, "derivative"),
    Check("sym_hc_all_roots", _sym_all_roots, 2, 4, "derivative"),
    Check("sym_hp_forms", _sym_hp, 2, 4, "derivative"),
    Check("sym_det_sum_lemma", _sym_det_sum, 1, 4, "symbolic"),
    Check("sym_evaluation", _evaluation, 1, 4, "symbolic"),
)


def _sizes(check: Check, max_n: int, caps: Caps) -> range:
    hi = min(check.hi, max_n)
    if check.cap:
        hi = min(hi, getattr(caps, check.cap))
    return range(check.lo, hi + 1)


def run_check(check: Check, ctx: Context, max_n: int) -> CheckResult:
    start = time.perf_counter()
    cases, failures = 0, []
    for n in _sizes(check, max_n, ctx.caps):
        for failure in check.run(n, ctx):
            cases += 1
            if failure is not None:
                logger.warning("%s failed: %s", check.name, failure.detail)
                failures.append(failure)
    return CheckResult(
        name=check.name, passed=not failures, cases=cases, failures=failures,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )


def run_verify(config: RunConfig) -> VerifyReport:
    max_n = config.max_n or DEFAULT_MAX_N
    ctx = Context(samples=config.samples, seed=config.seed, bound=settings.ENTRY_BOUND, caps=config.caps)
    results: List[CheckResult] = []
    for check in tqdm(CHECKS, desc="verify", unit="check", disable=None):
        results.append(run_check(check, ctx, max_n))
    return VerifyReport(
        passed=all(r.passed for r in results), max_n=max_n, samples=config.samples,
        seed=config.seed, checks=results,
    )
