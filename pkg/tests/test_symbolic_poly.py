import pytest
from hypothesis import given
import hypothesis.strategies as st
import sympy as sp

from hamcount.errors import ContractViolation, EnumerationCapExceeded, MatrixParseError
from hamcount.linalg.kernels import det, per
from hamcount.linalg.matrix import SquareMatrix, random_matrix
from hamcount.symbolic.listings import product_rule_check
from hamcount.symbolic.matrices import edge_matrix, sym_det, sym_per
from hamcount.symbolic.poly import Monomial, MultiPoly, parse_poly, partial_derivative, poly_sum

a = MultiPoly.edge
x = MultiPoly.vertex


@st.composite
def polys(draw, n=3, max_terms=4):
    """Sparse polynomials in a(i,j) and x(i) over [n]."""
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        edges = {(draw(st.integers(1, n)), draw(st.integers(1, n))): draw(st.integers(1, 2))}
        verts = {v: draw(st.integers(0, 2)) for v in range(1, n + 1)}
        m = Monomial.build(edges, verts)
        terms[m] = terms.get(m, 0) + draw(st.integers(-5, 5))
    return MultiPoly(terms)


# ---------------- ring operations ----------------

def test_additive_inverse():
    p = a(1, 2) + x(3) * a(2, 2)
    assert (p + (-p)).is_zero()
    assert p - p == 0


def test_single_product():
    q = a(1, 2) * a(2, 1)
    assert len(q) == 1
    assert q.coefficient(Monomial.build({(1, 2): 1, (2, 1): 1})) == 1


def test_binomial_expansion():
    q = (a(1, 1) + a(1, 2)) * (a(2, 1) + a(2, 2))
    assert len(q) == 4
    assert all(c == 1 for c in q.terms.values())


def test_exponents_accumulate():
    q = (a(1, 2) + a(1, 2)) * a(1, 2)
    assert q.coefficient(Monomial.build({(1, 2): 2})) == 2


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_zero_exponents_are_dropped():
    assert Monomial.build({(1, 2): 0}, {3: 0}) == Monomial()
    with pytest.raises(ContractViolation):
        Monomial.build({(1, 2): -1})


# ---------------- derivatives ----------------

def test_power_rule():
    p = x(1) * x(1) * a(1, 2)
    assert partial_derivative(p, [1]) == (x(1) * a(1, 2)).scale(2)


def test_mixed_derivative_to_constant():
    assert partial_derivative(x(1) * x(2), [1, 2]) == 1


def test_edge_variables_are_constants():
    assert partial_derivative(a(1, 1) + a(2, 3), [1]).is_zero()


@given(polys(n=3), polys(n=3))
def test_product_rule(p, q):
    assert product_rule_check(p, q, 3)


# ---------------- determinant and permanent ----------------

def test_sym_per_2():
    assert sym_per(edge_matrix(2)) == a(1, 1) * a(2, 2) + a(1, 2) * a(2, 1)


def test_sym_det_2():
    assert sym_det(edge_matrix(2)) == a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)


def test_sym_det_3_evaluates_like_det():
    d = sym_det(edge_matrix(3))
    assert len(d) == 6
    for seed in range(10):
        A = random_matrix(3, seed)
        assert d.evaluate(A) == det(A)


@pytest.mark.parametrize("n", range(1, 5))
def test_evaluation_commutes(n):
    d, p = sym_det(edge_matrix(n)), sym_per(edge_matrix(n))
    for seed in range(5):
        A = random_matrix(n, 300 + seed)
        assert d.evaluate(A) == det(A)
        assert p.evaluate(A) == per(A)


@given(polys(), polys(), st.lists(st.integers(-4, 4), min_size=12, max_size=12))
def test_evaluation_is_a_homomorphism(p, q, values):
    A = SquareMatrix(3, tuple(values[:9]))
    xs = values[9:]
    assert (p * q).evaluate(A, xs) == p.evaluate(A, xs) * q.evaluate(A, xs)
    assert (p + q).evaluate(A, xs) == p.evaluate(A, xs) + q.evaluate(A, xs)


def test_missing_vertex_value():
    with pytest.raises(ContractViolation):
        x(2).evaluate(SquareMatrix.from_rows([[1]]), [5])


def test_symbolic_cap():
    with pytest.raises(EnumerationCapExceeded):
        sym_det(edge_matrix(7))
    assert len(sym_det(edge_matrix(3), cap=3)) == 6


# ---------------- text form ----------------

def test_render():
    p = (a(1, 2) * a(1, 2) * x(3)).scale(-2) + MultiPoly.constant(5)
    assert p.render() == "5\n-2 * a(1,2)^2 * x(3)"


def test_parse_inverts_render():
    p = sym_det(edge_matrix(3)) * (x(1) + a(2, 2))
    assert parse_poly(p.render()) == p


def test_parse_errors():
    with pytest.raises(MatrixParseError) as exc:
        parse_poly("1 * a(1,2)\nz * a(1,1)")
    assert exc.value.line == 2
    with pytest.raises(MatrixParseError):
        parse_poly("1 * b(1,2)")


def test_sum_of_many():
    assert poly_sum([a(1, 1)] * 5) == a(1, 1).scale(5)


# ---------------- cross-check against sympy ----------------

def _sympy_edge_matrix(n):
    return sp.Matrix(n, n, lambda i, j: sp.Symbol(f"a_{i + 1}_{j + 1}"))


def _to_sympy(p: MultiPoly):
    expr = sp.Integer(0)
    for m, c in p.terms.items():
        term = sp.Integer(c)
        for (i, j), e in m.edges:
            term *= sp.Symbol(f"a_{i}_{j}") ** e
        for i, e in m.vertices:
            term *= sp.Symbol(f"x_{i}") ** e
        expr += term
    return expr


@pytest.mark.parametrize("n", range(1, 5))
def test_sym_det_matches_sympy(n):
    want = sp.expand(_sympy_edge_matrix(n).det(method="berkowitz"))
    assert sp.expand(_to_sympy(sym_det(edge_matrix(n))) - want) == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_sym_per_matches_sympy(n):
    want = sp.expand(_sympy_edge_matrix(n).per())
    assert sp.expand(_to_sympy(sym_per(edge_matrix(n))) - want) == 0
