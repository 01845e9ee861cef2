import itertools
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from lgmirror import linalg
from lgmirror.catalog import ENTRIES
from lgmirror.milnor import LITERAL, MilnorRing, closed_form_mu, ring
from lgmirror.oracle import check_normal_forms, hessian_matches, oracle_hessian, oracle_quotient_dim, sympy_poly
from lgmirror.polyform import parse_polynomial
from strategies import polynomials

# dimension from the dense sympy quotient, computed once and frozen
ORACLE_MU = {
    "x3": 2, "x4": 3, "x5": 4, "x3+y3": 4, "x3+y4": 6, "x3+y3+z3": 8,
    "loop(2,2)": 4, "loop(2,3)": 6, "loop(3,3)": 9, "loop(2,2,2)": 8, "loop(2,2,2,2)": 16,
    "chain(2,3)": 4, "chain(3,2)": 5, "x3+loop(2,2)": 8, "x3+chain(2,3)": 8,
}
# c with hess(W) = c * X^(h-1) in the Milnor ring
HESSIAN_CONSTANT = {
    "x3": 6, "x4": 12, "x5": 20, "x3+y3": 36, "x3+y4": 72, "x3+y3+z3": 216,
    "loop(2,2)": 12, "loop(2,3)": 30, "loop(3,3)": 72, "loop(2,2,2)": 72, "loop(2,2,2,2)": 240,
    "chain(2,3)": 24, "chain(3,2)": 30, "x3+loop(2,2)": 72, "x3+chain(2,3)": 144,
}


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_dimension_matches_oracle(entry):
    W = entry.poly
    assert ring(W).mu == oracle_quotient_dim(W) == ORACLE_MU[entry.name]


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_top_piece_and_pairing(entry):
    R = ring(entry.poly)
    nf, c = R.hessian
    assert c == HESSIAN_CONSTANT[entry.name]
    assert len(R.basis.by_degree[R.top_degree]) == 1
    assert linalg.det(R.pairing_matrix) != 0


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_hessian_agrees_with_sympy(entry):
    W = entry.poly
    R = ring(W)
    assert hessian_matches(W, R.hessian_polynomial)
    assert hessian_matches(W, R.hessian[0])


def test_oracle_hessian_examples():
    W = parse_polynomial("x^3")
    (X,), _ = sympy_poly(W)
    assert oracle_hessian(W) == 6 * X
    W = parse_polynomial("x^2*y+y^2*x")
    (x, y), _ = sympy_poly(W)
    assert oracle_hessian(W) == sympy.expand(4 * x * y - (2 * x + 2 * y) ** 2)


@pytest.mark.parametrize("name, closed", [("chain(2,3)", 3), ("chain(3,2)", 4), ("x3+chain(2,3)", 6)])
def test_chain_closed_form_undercounts(name, closed):
    W = next(e for e in ENTRIES if e.name == name).poly
    assert closed_form_mu(W) == closed
    assert ring(W).mu == ORACLE_MU[name] > closed


def test_chain_basis_example():
    R = ring(parse_polynomial("x^2*y+y^3"))
    assert set(R.monomials) == {(0, 0), (0, 1), (0, 2), (1, 0)}


def test_loop_reduction_and_pairing():
    R = ring(parse_polynomial("x^2*y+y^2*x"))
    assert R.normal_form((2, 0)) == {(1, 1): F(-2)}
    third = F(1, 3)
    assert R.pairing_matrix == [[0, 0, 0, third], [0, F(-2, 3), third, 0],
                                [0, third, F(-2, 3), 0], [third, 0, 0, 0]]


def test_literal_convention_values():
    R = MilnorRing(parse_polynomial("x^3"), convention=LITERAL)
    assert R.residue_pairing(R.one(), R.monomial((1,))) == F(1, 12)
    R = MilnorRing(parse_polynomial("x^2*y+y^2*x"), convention=LITERAL)
    assert R.residue_pairing(R.monomial((1, 0)), R.monomial((0, 1))) == F(1, 48)
    R = ring(parse_polynomial("x^3"))
    assert R.residue_pairing(R.one(), R.monomial((1,))) == F(1, 3)


@given(polynomials())
def test_normal_forms_agree_with_groebner(W):
    R = ring(W)
    box = list(itertools.product(*(range(a + 1) for a in W.exponents)))[:40]
    assert check_normal_forms(W, box, R.normal_form) == []


@given(polynomials(), st.data())
def test_multiplication_is_commutative_and_associative(W, data):
    R = ring(W)
    pick = st.sampled_from(R.monomials)
    a, b, c = (R.monomial(data.draw(pick)) for _ in range(3))
    assert R.multiply(a, b) == R.multiply(b, a)
    assert R.multiply(R.multiply(a, b), c) == R.multiply(a, R.multiply(b, c))


@given(polynomials())
def test_pairing_is_frobenius(W):
    R = ring(W)
    mons = R.monomials[:6]
    for a, b, c in itertools.product(mons, repeat=3):
        ab = R.multiply(R.monomial(a), R.monomial(b))
        bc = R.multiply(R.monomial(b), R.monomial(c))
        assert R.residue_pairing(ab, R.monomial(c)) == R.residue_pairing(R.monomial(a), bc)


@given(polynomials())
def test_degrees_are_graded(W):
    R = ring(W)
    for m in R.monomials:
        assert 0 <= R.degree(m) <= R.top_degree
