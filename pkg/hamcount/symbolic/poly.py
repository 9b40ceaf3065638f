"""Sparse multivariate polynomials over edge variables a(i,j) and vertex
variables x(i), with exact integer coefficients.

A :class:`MultiPoly` is a dict from :class:`Monomial` to a nonzero int and is
never mutated after construction; every operation returns a new value.
"""
from __future__ import annotations

from dataclasses import dataclass
import re
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from hamcount.errors import ContractViolation, MatrixParseError
from hamcount.linalg.matrix import SquareMatrix

Edge = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Monomial:
    """Canonical sparse monomial: sorted (pair, exponent) and (vertex, exponent)
    tuples, no zero exponents. Build through :meth:`build` or the products of
    existing monomials; the raw constructor trusts its input."""

    edges: Tuple[Tuple[Edge, int], ...] = ()
    vertices: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def build(cls, edges: Optional[Mapping[Edge, int]] = None,
              vertices: Optional[Mapping[int, int]] = None) -> "Monomial":
        for key, e in list((edges or {}).items()) + list((vertices or {}).items()):
            if e < 0:
                raise ContractViolation(f"negative exponent {e} on {key}")
        return cls(
            tuple(sorted((k, e) for k, e in (edges or {}).items() if e)),
            tuple(sorted((k, e) for k, e in (vertices or {}).items() if e)),
        )

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.edges and not other.vertices:
            return self
        if not self.edges and not self.vertices:
            return other
        e: Dict[Edge, int] = dict(self.edges)
        for k, v in other.edges:
            e[k] = e.get(k, 0) + v
        x: Dict[int, int] = dict(self.vertices)
        for k, v in other.vertices:
            x[k] = x.get(k, 0) + v
        return Monomial(tuple(sorted(e.items())), tuple(sorted(x.items())))

    def vertex_exponent(self, i: int) -> int:
        for k, e in self.vertices:
            if k == i:
                return e
        return 0

    def lower_vertex(self, i: int) -> "Monomial":
        """Drop one power of x(i); caller guarantees it is present."""
        x = tuple((k, e - 1 if k == i else e) for k, e in self.vertices)
        return Monomial(self.edges, tuple((k, e) for k, e in x if e))

    def edge_map(self) -> Dict[Edge, int]:
        return dict(self.edges)

    def vertex_map(self) -> Dict[int, int]:
        return dict(self.vertices)

    def evaluate(self, a: SquareMatrix, x: Sequence[int] = ()) -> int:
        value = 1
        for (i, j), e in self.edges:
            value *= a[i, j] ** e
        for i, e in self.vertices:
            if i > len(x):
                raise ContractViolation(f"no value supplied for x({i})")
            value *= x[i - 1] ** e
        return value

    def render(self) -> str:
        parts = [f"a({i},{j})" + (f"^{e}" if e > 1 else "") for (i, j), e in self.edges]
        parts += [f"x({i})" + (f"^{e}" if e > 1 else "") for i, e in self.vertices]
        return " * ".join(parts)


ONE = Monomial()


class MultiPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self._terms: Dict[Monomial, int] = {m: int(c) for m, c in (terms or {}).items() if c}

    # ---------------- constructors ----------------

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls({ONE: c})

    @classmethod
    def edge(cls, i: int, j: int) -> "MultiPoly":
        return cls({Monomial((((i, j), 1),)): 1})

    @classmethod
    def vertex(cls, i: int) -> "MultiPoly":
        return cls({Monomial((), ((i, 1),)): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, c: int = 1) -> "MultiPoly":
        return cls({m: c})

    # ---------------- views ----------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def monomials(self) -> List[Monomial]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def has_vertex_variables(self) -> bool:
        return any(m.vertices for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        return isinstance(other, MultiPoly) and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MultiPoly({len(self)} terms)"

    # ---------------- ring operations ----------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return poly_add(self, other)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return poly_add(self, poly_negate(other))

    def __neg__(self) -> "MultiPoly":
        return poly_negate(self)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        return poly_mul(self, other)

    def scale(self, c: int) -> "MultiPoly":
        return MultiPoly({m: v * c for m, v in self._terms.items()})

    def evaluate(self, a: SquareMatrix, x: Sequence[int] = ()) -> int:
        """Substitute a(i,j) <- a[i,j] and x(i) <- x[i-1]."""
        return sum(c * m.evaluate(a, x) for m, c in self._terms.items())

    def render(self) -> str:
        """Canonical text form, one term per line, terms in canonical order."""
        lines = []
        for m in self.monomials():
            body = m.render()
            lines.append(f"{self._terms[m]} * {body}" if body else f"{self._terms[m]}")
        return "\n".join(lines)


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out = dict(p._terms)
    for m, c in q._terms.items():
        out[m] = out.get(m, 0) + c
    return MultiPoly(out)


def poly_negate(p: MultiPoly) -> MultiPoly:
    return MultiPoly({m: -c for m, c in p._terms.items()})


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out: Dict[Monomial, int] = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = m1 * m2
            out[m] = out.get(m, 0) + c1 * c2
    return MultiPoly(out)


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    out: Dict[Monomial, int] = {}
    for p in polys:
        for m, c in p._terms.items():
            out[m] = out.get(m, 0) + c
    return MultiPoly(out)


def poly_product(polys: Iterable[MultiPoly]) -> MultiPoly:
    out = MultiPoly.constant(1)
    for p in polys:
        if p.is_zero():
            return MultiPoly()
        out = poly_mul(out, p)
    return out


def partial_derivative(p: MultiPoly, S: Iterable[int]) -> MultiPoly:
    """Apply d/dx(s) for each s in the multiset S; edge variables are constants."""
    terms: Dict[Monomial, int] = dict(p._terms)
    for v in S:
        nxt: Dict[Monomial, int] = {}
        for m, c in terms.items():
            e = m.vertex_exponent(v)
            if e:
                low = m.lower_vertex(v)
                nxt[low] = nxt.get(low, 0) + c * e
        terms = {m: c for m, c in nxt.items() if c}
        if not terms:
            break
    return MultiPoly(terms)


# ---------------- text form ----------------

_FACTOR = re.compile(r"^(a)\((\d+),(\d+)\)(?:\^(\d+))?$|^(x)\((\d+)\)(?:\^(\d+))?$")


def parse_poly(text: str) -> MultiPoly:
    """Inverse of :meth:`MultiPoly.render`."""
    out: Dict[Monomial, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        head, *factors = [tok.strip() for tok in line.split("*")]
        try:
            coeff = int(head)
        except ValueError:
            raise MatrixParseError(f"bad coefficient {head!r}", line=lineno) from None
        edges: Dict[Edge, int] = {}
        verts: Dict[int, int] = {}
        for f in factors:
            hit = _FACTOR.match(f)
            if not hit:
                raise MatrixParseError(f"bad factor {f!r}", line=lineno)
            if hit.group(1):
                key = (int(hit.group(2)), int(hit.group(3)))
                edges[key] = edges.get(key, 0) + int(hit.group(4) or 1)
            else:
                k = int(hit.group(6))
                verts[k] = verts.get(k, 0) + int(hit.group(7) or 1)
        m = Monomial.build(edges, verts)
        out[m] = out.get(m, 0) + coeff
    return MultiPoly(out)
