"""Text and JSON rendering of CLI results. JSON goes through the pydantic models
so counts keep their decimal-string form."""
from __future__ import annotations

import json
import sys
from typing import Any, Dict, List, Literal, Optional, TextIO

from hamcount.schemas import BenchRow, CountReport, ErrorReport, VerifyReport
from hamcount.symbolic.poly import MultiPoly

Output = Literal["text", "json"]


def render_count(report: CountReport, output: Output) -> str:
    if output == "json":
        return json.dumps(report.to_payload())
    return (
        f"count: {report.count}\n"
        f"method: {report.method}\n"
        f"n: {report.n}\n"
        f"terms_evaluated: {report.terms_evaluated}\n"
        f"elapsed_ms: {report.elapsed_ms:.3f}"
    )


def render_listing(kind: str, n: int, poly: MultiPoly, output: Output) -> str:
    if output == "json":
        return json.dumps({
            "kind": kind,
            "n": n,
            "terms": [{"coefficient": str(poly.coefficient(m)), "monomial": m.render()} for m in poly.monomials()],
        })
    return poly.render()


def render_verify(report: VerifyReport, output: Output) -> str:
    if output == "json":
        return report.model_dump_json()
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"{status} {check.name:<28} cases={check.cases:<6} {check.elapsed_ms:9.1f} ms")
        for f in check.failures:
            seed = f" seed={f.seed}" if f.seed is not None else ""
            lines.append(f"    n={f.n}{seed}: {f.detail}")
    failed = sum(not c.passed for c in report.checks)
    if failed:
        lines.append(f"verify: {failed} of {len(report.checks)} checks failed")
    else:
        lines.append(f"verify: all {len(report.checks)} checks passed (max_n={report.max_n}, seed={report.seed})")
    return "\n".join(lines)


def render_bench(rows: List[BenchRow], output: Output) -> str:
    if output == "json":
        return json.dumps([r.model_dump(mode="json") for r in rows])
    lines = [f"{'n':>3} {'count':>24} {'terms':>8} {'identity_ms':>12} {'brute_ms':>12} {'agree':>6}"]
    for r in rows:
        brute = f"{r.brute_ms:12.2f}" if r.brute_ms is not None else " " * 12
        agree = "" if r.agree is None else ("yes" if r.agree else "NO")
        lines.append(f"{r.n:>3} {r.count:>24} {r.terms_evaluated:>8} {r.identity_ms:12.2f} {brute} {agree:>6}")
    return "\n".join(lines)


def emit_error(payload: Dict[str, Any], stream: Optional[TextIO] = None) -> None:
    stream = stream or sys.stderr
    stream.write(ErrorReport(**payload).model_dump_json(exclude_none=True) + "\n")
