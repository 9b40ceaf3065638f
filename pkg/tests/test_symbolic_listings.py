from math import factorial
from pathlib import Path

import pytest
from hypothesis import given
import hypothesis.strategies as st

from hamcount.errors import ContractViolation, EnumerationCapExceeded, UnsupportedDimension
from hamcount.oracles.bruteforce import signed_permutations
from hamcount.oracles.permutations import is_single_cycle
from hamcount.symbolic.listings import (
    cycle_refinement_coefficient, edge_monomial, in_degree_sequence, sym_coeff_profile,
    sym_det_sum_lemma_check, sym_hc_all_roots_form, sym_hc_derivative_form, sym_hc_identity_expand,
    sym_hc_listing, sym_hp_derivative_form, sym_hp_identity_expand, sym_hp_listing, sym_tdmtt,
    sym_tree_listing, track_in_degrees,
)
from hamcount.symbolic.poly import MultiPoly

GOLDEN = Path(__file__).parent / "golden"
a = MultiPoly.edge


def golden(name: str) -> str:
    return (GOLDEN / name).read_text()


# ---------------- cycle listing and identity ----------------

def test_cycle_listing_3_golden():
    assert sym_hc_listing(3).render() + "\n" == golden("cycles_3.txt")


def test_cycle_listing_2_golden():
    assert sym_hc_listing(2).render() + "\n" == golden("cycles_2.txt")


def test_cycle_listing_1_is_the_loop():
    assert sym_hc_listing(1) == a(1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_cycle_listing_size(n):
    assert len(sym_hc_listing(n)) == factorial(n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_identity_expands_to_listing(n):
    expanded = sym_hc_identity_expand(n)
    assert expanded == sym_hc_listing(n)
    assert all(c == 1 for c in expanded.terms.values())


def test_identity_3_golden():
    assert sym_hc_identity_expand(3).render() + "\n" == golden("cycles_3.txt")


def test_identity_cap():
    with pytest.raises(EnumerationCapExceeded):
        sym_hc_identity_expand(6)
    with pytest.raises(EnumerationCapExceeded):
        sym_hc_listing(7)


# ---------------- monomial coefficients ----------------

def test_coefficient_examples():
    assert sym_coeff_profile(3, (2, 3, 1)) == 1
    assert sym_coeff_profile(3, (1, 2, 3)) == 0
    assert sym_coeff_profile(3, (2, 1, 3)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_every_permutation_coefficient(n):
    for _, sigma in signed_permutations(n):
        want = 1 if is_single_cycle(sigma) else 0
        assert sym_coeff_profile(n, sigma) == want, sigma
        assert cycle_refinement_coefficient(sigma) == want, sigma


@given(st.permutations(list(range(1, 9))))
def test_refinement_coefficient_is_cycle_indicator(sigma):
    assert cycle_refinement_coefficient(sigma) == (1 if is_single_cycle(sigma) else 0)


def test_coefficient_needs_a_permutation():
    with pytest.raises(ContractViolation):
        sym_coeff_profile(3, (1, 1, 2))


# ---------------- trees ----------------

def test_tdmtt_3_has_nine_monomials():
    t = sym_tdmtt(3)
    assert len(t) == 9
    assert all(c == 1 for c in t.terms.values())


def test_tdmtt_2_golden():
    assert sym_tdmtt(2).render() + "\n" == golden("trees_2.txt")


def test_tdmtt_1_is_the_loop():
    assert sym_tdmtt(1) == a(1, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_tdmtt_equals_tree_listing(n):
    assert sym_tdmtt(n) == sym_tree_listing(n)


def test_tdmtt_4_size():
    assert len(sym_tdmtt(4)) == 64


# ---------------- derivative construction ----------------

def test_derivative_form_2():
    assert sym_hc_derivative_form(2) == a(1, 2) * a(2, 1)


def test_derivative_form_1():
    assert sym_hc_derivative_form(1) == a(1, 1)


@pytest.mark.parametrize("n", range(2, 5))
def test_derivative_form_equals_listing(n):
    d = sym_hc_derivative_form(n)
    assert d == sym_hc_listing(n)
    assert not d.has_vertex_variables()


@pytest.mark.parametrize("n,root", [(3, 1), (3, 2), (4, 1), (4, 3)])
def test_any_root_gives_the_listing(n, root):
    assert sym_hc_derivative_form(n, root=root) == sym_hc_listing(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_all_roots_form_counts_each_cycle_n_times(n):
    assert sym_hc_all_roots_form(n) == sym_hc_listing(n).scale(n)


def test_derivative_root_out_of_range():
    with pytest.raises(ContractViolation):
        sym_hc_derivative_form(3, root=4)


# ---------------- paths ----------------

def test_path_listing_3():
    p = sym_hp_listing(3)
    assert len(p) == 6
    # ordering (1, 2, 3): path 1 -> 2 -> 3 with loop at 3
    assert p.coefficient(next(iter((a(1, 2) * a(2, 3) * a(3, 3)).terms))) == 1


@pytest.mark.parametrize("n", range(2, 5))
def test_path_identity_equals_listing(n):
    assert sym_hp_identity_expand(n) == sym_hp_listing(n)


@pytest.mark.parametrize("n", range(2, 5))
def test_path_derivative_equals_listing(n):
    assert sym_hp_derivative_form(n) == sym_hp_listing(n)


def test_paths_need_two_vertices():
    for fn in (sym_hp_listing, sym_hp_identity_expand, sym_hp_derivative_form):
        with pytest.raises(UnsupportedDimension):
            fn(1)


# ---------------- determinant sum lemma ----------------

@pytest.mark.parametrize("n", range(1, 5))
def test_det_sum_lemma(n):
    assert sym_det_sum_lemma_check(n)


# ---------------- in-degree bookkeeping ----------------

@pytest.mark.parametrize("listing", [sym_hc_listing(4), sym_tdmtt(4), sym_hp_listing(3)])
def test_tracking_records_in_degrees(listing):
    tracked = track_in_degrees(listing)
    assert len(tracked) == len(listing)
    for m in tracked.monomials():
        degrees = in_degree_sequence(m, 4)
        assert m.vertex_map() == {v: d for v, d in enumerate(degrees, start=1) if d}


def test_cycles_have_unit_in_degrees():
    for m in sym_hc_listing(5).monomials():
        assert in_degree_sequence(m, 5) == (1, 1, 1, 1, 1)


def test_edge_monomial():
    assert edge_monomial((2, 1)) == next(iter((a(1, 2) * a(2, 1)).terms))
