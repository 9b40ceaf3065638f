"""Matrix and edge-list readers.

Matrix format: the first token is n, then n*n integers in row-major order,
separated by any whitespace. Edge-list format: a header line ``n <count>``
followed by ``u v`` (weight 1) or ``u v w`` lines; blank lines and ``#``
comments are skipped and repeated edges add their weights.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path
import sys
from typing import Dict, List, Literal, Optional, Tuple

from hamcount.errors import InputUnavailable, MatrixParseError
from hamcount.linalg.matrix import SquareMatrix
from hamcount.schemas import InputGraph

logger = logging.getLogger(__name__)

Token = Tuple[str, int, int]  # text, line, column (both 1-indexed)
InputFormat = Literal["auto", "matrix", "edgelist"]

_INTEGER = re.compile(r"-?[0-9]+")  # ASCII digits, optional minus; no "+", "_" or spaces


def _tokens(text: str, comments: bool = False) -> List[Token]:
    out: List[Token] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if comments and "#" in line:
            line = line[:line.index("#")]
        col = 0
        for part in line.split():
            col = line.index(part, col)
            out.append((part, lineno, col + 1))
            col += len(part)
    return out


def _int(tok: Token) -> int:
    text, line, col = tok
    if not _INTEGER.fullmatch(text):
        raise MatrixParseError(f"non-integer token {text!r}", line=line, column=col)
    return int(text)


def parse_matrix(text: str) -> SquareMatrix:
    toks = _tokens(text)
    if not toks:
        raise MatrixParseError("empty input: expected the dimension n")
    n = _int(toks[0])
    if n < 1:
        raise MatrixParseError(f"matrix dimension must be >= 1, got {n}", line=toks[0][1], column=toks[0][2])
    body = toks[1:]
    if len(body) != n * n:
        where = body[n * n] if len(body) > n * n else (toks[-1] if toks else None)
        raise MatrixParseError(
            f"expected {n * n} entries, found {len(body)}",
            line=where[1] if where else None,
        )
    return SquareMatrix(n, tuple(_int(t) for t in body))


def parse_edgelist(text: str, undirected: bool = False) -> SquareMatrix:
    """Dense matrix from an edge list; with ``undirected`` each line also adds (v,u), loops once."""
    by_line: Dict[int, List[Token]] = {}
    for tok in _tokens(text, comments=True):
        by_line.setdefault(tok[1], []).append(tok)
    lines = sorted(by_line.items())
    if not lines:
        raise MatrixParseError("empty input: expected header 'n <count>'")
    lineno, header = lines[0]
    if len(header) != 2 or header[0][0] != "n":
        raise MatrixParseError("expected header 'n <count>'", line=lineno)
    n = _int(header[1])
    if n < 1:
        raise MatrixParseError(f"vertex count must be >= 1, got {n}", line=lineno)
    rows = [[0] * n for _ in range(n)]
    for lineno, parts in lines[1:]:
        if len(parts) not in (2, 3):
            raise MatrixParseError("malformed edge line: expected 'u v' or 'u v w'", line=lineno)
        u, v = _int(parts[0]), _int(parts[1])
        w = _int(parts[2]) if len(parts) == 3 else 1
        for vertex in (u, v):
            if not 1 <= vertex <= n:
                raise MatrixParseError(f"vertex {vertex} out of range [1..{n}]", line=lineno)
        rows[u - 1][v - 1] += w
        if undirected and u != v:
            rows[v - 1][u - 1] += w
    return SquareMatrix.from_rows(rows)


def detect_format(text: str) -> Literal["matrix", "edgelist"]:
    toks = _tokens(text, comments=True)
    return "edgelist" if toks and toks[0][0] == "n" else "matrix"


def mirror_undirected(A: SquareMatrix) -> SquareMatrix:
    """Fill each absent a(v,u) from a(u,v), u != v; entries already present are kept."""
    rows = A.rows()
    for u in range(A.n):
        for v in range(A.n):
            if u != v and rows[v][u] == 0 and rows[u][v] != 0:
                rows[v][u] = rows[u][v]
    return SquareMatrix.from_rows(rows)


def render_matrix(A: SquareMatrix) -> str:
    lines = [str(A.n)] + [" ".join(str(v) for v in A.row(i)) for i in range(1, A.n + 1)]
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputUnavailable(f"cannot read {path}: {exc.strerror or exc}") from exc


def load_input_graph(path: str, fmt: InputFormat = "auto", undirected: bool = False,
                     text: Optional[str] = None) -> InputGraph:
    text = read_text(path) if text is None else text
    resolved = detect_format(text) if fmt == "auto" else fmt
    if resolved == "edgelist":
        A = parse_edgelist(text, undirected=undirected)
    else:
        A = parse_matrix(text)
        if undirected:
            A = mirror_undirected(A)
    logger.debug("loaded %s input %s: n=%d", resolved, path, A.n)
    return InputGraph(n=A.n, format=resolved, matrix=A)
