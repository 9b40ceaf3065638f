"""Command-line entry point: ``python -m hamcount.main <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage, input or parse error.
Errors are written to stderr as a single JSON object.
"""
from __future__ import annotations

import argparse
import logging
from math import factorial
import sys
import time
from typing import Callable, Dict, List, NoReturn, Optional

from pydantic import ValidationError

from hamcount.errors import ContractViolation, HamcountError, UsageError
from hamcount.harness.bench import run_bench
from hamcount.harness.verify import run_verify
from hamcount.identities.counting import hc_count_identity, hp_count_identity, tree_count_rooted, tree_count_tdmtt
from hamcount.io.parsing import load_input_graph
from hamcount.io.report import emit_error, render_bench, render_count, render_listing, render_verify
from hamcount.linalg.matrix import SquareMatrix
from hamcount.oracles.bruteforce import hc_bruteforce, hp_bruteforce, tree_bruteforce
from hamcount.schemas import Caps, CountReport, RunConfig
from hamcount.settings import settings
from hamcount.symbolic.listings import (
    sym_hc_derivative_form, sym_hc_identity_expand, sym_hc_listing, sym_hp_listing, sym_tdmtt,
)
from hamcount.symbolic.poly import MultiPoly

logger = logging.getLogger("hamcount")


def _timed(method: str, n: int, terms: int, fn: Callable[[], int]) -> CountReport:
    start = time.perf_counter()
    count = fn()
    return CountReport(n=n, method=method, count=count, terms_evaluated=terms,
                       elapsed_ms=(time.perf_counter() - start) * 1000.0)


def _load(config: RunConfig) -> SquareMatrix:
    graph = load_input_graph(config.input_path, config.input_format, config.undirected)
    A = graph.matrix
    if config.diag_override is not None:
        A = A.with_diagonal(config.diag_override)
    return A


# ---------------- subcommands ----------------

def cmd_cycles(config: RunConfig) -> int:
    A = _load(config)
    if config.brute:
        report = _timed("hc_bruteforce", A.n, factorial(A.n), lambda: hc_bruteforce(A, cap=config.caps.brute))
    else:
        report = hc_count_identity(A, threads=config.threads)
    print(render_count(report, config.output))
    return 0


def cmd_paths(config: RunConfig) -> int:
    A = _load(config)
    if config.brute:
        report = _timed("hp_bruteforce", A.n, factorial(A.n), lambda: hp_bruteforce(A, cap=config.caps.brute))
    else:
        report = hp_count_identity(A, threads=config.threads)
    print(render_count(report, config.output))
    return 0


def cmd_trees(config: RunConfig) -> int:
    A = _load(config)
    root = config.root
    if root is not None and not 1 <= root <= A.n:
        raise ContractViolation(f"root {root} out of range [1..{A.n}]")
    if config.root_weight is not None:
        if root is None:
            A = A.with_diagonal(config.root_weight)
        else:
            A = A.with_diagonal([config.root_weight if k == root else v for k, v in enumerate(A.diagonal(), start=1)])
    if root is not None and config.brute:
        # trees rooted elsewhere need a loop there; clearing the other loops leaves only root
        only_root = A.with_diagonal([v if k == root else 0 for k, v in enumerate(A.diagonal(), start=1)])
        report = _timed("tree_bruteforce", A.n, A.n ** A.n, lambda: tree_bruteforce(only_root, cap=config.caps.function))
    elif root is not None:
        report = _timed("tree_rooted", A.n, 1, lambda: tree_count_rooted(A, root))
    elif config.brute:
        report = _timed("tree_bruteforce", A.n, A.n ** A.n, lambda: tree_bruteforce(A, cap=config.caps.function))
    else:
        report = tree_count_tdmtt(A)
    print(render_count(report, config.output))
    return 0


def _listing(config: RunConfig) -> MultiPoly:
    n, caps = config.list_n, config.caps
    if config.list_kind == "cycles":
        return sym_hc_listing(n, cap=caps.symbolic)
    if config.list_kind == "trees":
        return sym_tdmtt(n, cap=caps.symbolic)
    if config.list_kind == "identity":
        return sym_hc_identity_expand(n, cap=caps.identity)
    if config.list_kind == "paths":
        return sym_hp_listing(n, cap=caps.symbolic)
    return sym_hc_derivative_form(n, root=config.root, cap=caps.derivative)


def cmd_list(config: RunConfig) -> int:
    print(render_listing(config.list_kind, config.list_n, _listing(config), config.output))
    return 0


def cmd_verify(config: RunConfig) -> int:
    report = run_verify(config)
    print(render_verify(report, config.output))
    return 0 if report.passed else 1


def cmd_bench(config: RunConfig) -> int:
    rows = run_bench(config)
    print(render_bench(rows, config.output))
    return 0 if all(r.agree is not False for r in rows) else 1


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "cycles": cmd_cycles,
    "paths": cmd_paths,
    "trees": cmd_trees,
    "list": cmd_list,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def run(config: RunConfig) -> int:
    try:
        return COMMANDS[config.subcommand](config)
    except HamcountError as exc:
        logger.debug("%s: %s", exc.kind, exc)
        emit_error(exc.payload())
        return exc.exit_code


# ---------------- argument parsing ----------------

class _Parser(argparse.ArgumentParser):
    # subparsers inherit this class, so every usage error goes through the JSON path
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hamcount", description=__doc__,
                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", choices=["text", "json"], default="text")
        p.add_argument("--json", dest="output", action="store_const", const="json", help="same as --output json")

    for name, help_text in (("cycles", "count Hamiltonian cycles"),
                            ("paths", "count functional Hamiltonian paths"),
                            ("trees", "count rooted functional trees")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="matrix or edge-list file, '-' for stdin")
        p.add_argument("--format", dest="input_format", choices=["auto", "matrix", "edgelist"], default="auto")
        p.add_argument("--brute", action="store_true", help="use the enumeration oracle")
        p.add_argument("--diag", dest="diag_override", type=int, default=None, help="overwrite every loop weight")
        p.add_argument("--undirected", action="store_true", help="mirror each edge before counting")
        p.add_argument("--threads", type=int, default=settings.THREADS)
        if name == "trees":
            p.add_argument("--root", type=int, default=None)
            p.add_argument("--root-weight", dest="root_weight", type=int, default=None)
        output_flags(p)

    p = sub.add_parser("list", help="print a symbolic listing in canonical text form")
    p.add_argument("kind", choices=["cycles", "trees", "identity", "paths", "derivative"])
    p.add_argument("n", type=int)
    p.add_argument("--root", type=int, default=None, help="root vertex for 'derivative'")
    output_flags(p)

    p = sub.add_parser("verify", help="run the oracle and symbolic property suite")
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--samples", type=int, default=settings.VERIFY_SAMPLES)
    p.add_argument("--seed", type=int, default=settings.SEED)
    output_flags(p)

    p = sub.add_parser("bench", help="time the cycle identity against brute force")
    p.add_argument("--min-n", dest="min_n", type=int, default=2)
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--seed", type=int, default=settings.SEED)
    p.add_argument("--threads", type=int, default=settings.THREADS)
    output_flags(p)
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = dict(vars(args))
    fields.pop("verbose", None)
    if "input" in fields:
        fields["input_path"] = fields.pop("input")
    if "kind" in fields:
        fields["list_kind"] = fields.pop("kind")
        fields["list_n"] = fields.pop("n")
    fields["caps"] = Caps()
    return RunConfig(**fields)


def _configure_logging(verbose: int) -> None:
    level = {0: settings.LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        emit_error(exc.payload())
        return exc.exit_code
    _configure_logging(args.verbose)
    try:
        config = config_from_args(args)
    except ValidationError as exc:
        emit_error({"error": "invalid_arguments", "message": "; ".join(e["msg"] for e in exc.errors())})
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
