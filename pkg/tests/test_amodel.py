from fractions import Fraction as F

from lgmirror.amodel import a_product, correlator, sub_polynomial
from lgmirror.polyform import parse_polynomial
from lgmirror.statespace import A, SectorElement, StateSpace
from lgmirror.symmetry import GroupElement, J_group, gmax


def ge(*xs):
    return GroupElement(tuple(F(x) for x in xs))


def el(g, m):
    return SectorElement(g, tuple(m))


def test_cubic_three_point_function():
    W = parse_polynomial("x^3")
    g, h = el(ge("1/3"), [0]), el(ge("2/3"), [0])
    assert correlator(W, gmax(W), (g, g, h)) == 1


def test_sector_rule_kills_mismatched_triples():
    W = parse_polynomial("x^3")
    g, h = el(ge("1/3"), [0]), el(ge("2/3"), [0])
    assert correlator(W, gmax(W), (g, g, g)) == 0
    assert correlator(W, gmax(W), (h, h, h)) == 0


def test_product_of_two_cubics():
    W = parse_polynomial("x^3+y^3")
    H = StateSpace(W, gmax(W), A)
    a, b = el(ge("2/3", "1/3"), (0, 0)), el(ge("1/3", "2/3"), (0, 0))
    assert a_product(H, {a: F(1)}, {b: F(1)}) == {el(ge("2/3", "2/3"), (0, 0)): F(1)}


def test_unit_acts_trivially():
    W = parse_polynomial("x^3+y^3")
    H = StateSpace(W, J_group(W), A)
    one = {H.identity(): F(1)}
    for e in H.basis:
        assert a_product(H, one, {e: F(1)}) == {e: F(1)}


def test_empty_target_sector_gives_zero():
    W = parse_polynomial("x^3")
    H = StateSpace(W, gmax(W), A)
    g = el(ge("2/3"), [0])
    assert a_product(H, {g: F(1)}, {g: F(1)}) == {}


def test_sub_polynomial_keeps_names():
    W = parse_polynomial("x^3+y^2*z+z^2*y")
    assert sub_polynomial(W, (1, 2)).variable_names == ("y", "z")
