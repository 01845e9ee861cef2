import pytest
import sympy

from lgmirror.errors import DegreeBoundExceeded
from lgmirror.oracle import (DenseQuotient, in_jacobian_ideal, oracle_quotient_dim, oracle_srAn,
                             srAn_cases, sympy_poly)
from lgmirror.polyform import CHAIN, FERMAT, LOOP, build, parse_polynomial


def atom(kind, a):
    return build(kind, a).atoms[0]


def by_n(out):
    return {n: (v, names) for n, v, names in out["solutions"]}


@pytest.mark.parametrize("text,mu", [("x^3", 2), ("x^2*y+y^3", 4), ("x^2*y+y^2*x", 4)])
def test_quotient_dimension(text, mu):
    assert oracle_quotient_dim(parse_polynomial(text)) == mu


def test_quotient_refuses_too_many_variables():
    W = parse_polynomial("+".join(f"x{i}^3" for i in range(7)))
    with pytest.raises(DegreeBoundExceeded):
        DenseQuotient(W)


def test_jacobian_membership():
    W = parse_polynomial("x^2*y+y^2*x")
    F = sympy.Rational
    # x^2 + 2xy is the y-partial
    assert in_jacobian_ideal(W, {(2, 0): F(1), (1, 1): F(2)})
    assert not in_jacobian_ideal(W, {(1, 1): F(1)})


def test_sympy_poly_round_trip():
    X, expr = sympy_poly(parse_polynomial("x^2*y+y^3"))
    assert sympy.expand(expr - (X[0] ** 2 * X[1] + X[1] ** 3)) == 0


def test_even_loop_integer_solutions():
    sols = by_n(oracle_srAn(atom(LOOP, (2, 2))))
    assert sols[(1, 1)] == ((3, 3), ["a"])
    assert sols[(2, 0)] == ((4, 2), ["b"])
    assert sols[(0, 2)] == ((2, 4), ["c"])
    assert len(sols) == 3


def test_odd_loop_only_first_case():
    out = oracle_srAn(atom(LOOP, (2, 2, 2)))
    assert not out["unclassified"]
    assert [names for _, _, names in out["solutions"]] == [["a"]]


def test_chain_solutions_need_the_extra_index():
    out = oracle_srAn(atom(CHAIN, (2, 3)))
    assert not out["unclassified"]
    sols = by_n(out)
    assert sols[(1, 1)][1] == ["s=1"]
    assert sols[(2, 1)][1] == ["s=2"]
    # no entry of n equals 1, so s runs one past the atom length
    assert sols[(2, 0)] == ((4, 2), ["s=3"])


def test_case_vectors():
    assert srAn_cases(atom(LOOP, (2, 2))) == {"a": (3, 3), "b": (4, 2), "c": (2, 4)}
    assert srAn_cases(atom(FERMAT, (3,))) == {"a": (3,)}
    assert set(srAn_cases(atom(CHAIN, (2, 2, 2)))) == {"s=1", "s=2", "s=3", "s=4"}
