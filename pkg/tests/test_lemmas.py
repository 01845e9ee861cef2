import pytest
from hypothesis import given, settings

from lgmirror.catalog import ENTRIES
from lgmirror.lemmas import (CHECKS, canonical, even_loop_powers, hessian_criterion, integer_solutions,
                             minus_J, one_of_three, run_all)
from lgmirror.polyform import CHAIN, FERMAT, LOOP, build
from strategies import chains, loops

ATOMS = sorted({(a.kind, a.exponents): a for e in ENTRIES for a in e.poly.atoms}.values(),
               key=lambda a: (a.kind, a.exponents))
EXTRA = [build(CHAIN, a).atoms[0] for a in [(2, 2, 2), (2, 2, 2, 3), (3, 3, 3)]]


@pytest.mark.parametrize("atom", ATOMS + EXTRA, ids=lambda a: a.label())
def test_every_check_passes(atom):
    for res in run_all(atom):
        assert res.ok, (res.name, res.failures[:5])


def test_fermat_skips_integer_solutions():
    res = integer_solutions(build(FERMAT, (3,)).atoms[0])
    assert res.ok and res.checked == 0 and "skipped" in res.notes


def test_even_loop_only():
    assert "skipped" in even_loop_powers(build(LOOP, (2, 2, 2)).atoms[0]).notes
    res = even_loop_powers(build(LOOP, (2, 3)).atoms[0])
    assert res.checked == 2 and res.ok


def test_loop_trichotomy_shapes():
    res = one_of_three(build(LOOP, (2, 2)).atoms[0])
    assert res.notes["shapes"] == ["even", "h-1", "odd"]


def test_chain_shapes_include_extended_index():
    res = one_of_three(build(CHAIN, (2, 3)).atoms[0])
    assert res.ok and "s=3" in res.notes["shapes"]


def test_canonical_reorders_variables():
    from lgmirror.polyform import parse_polynomial
    W = parse_polynomial("y^2*x+x^3")
    assert canonical(W.atoms[0]).exponent_matrix == build(CHAIN, (2, 3)).exponent_matrix


def test_result_json():
    js = minus_J(build(LOOP, (2, 2)).atoms[0]).to_json()
    assert js["passed"] and js["checked"] == 1


def test_check_list():
    assert len(CHECKS) == 6


@settings(max_examples=10)
@given(loops)
def test_random_loops(W):
    a = W.atoms[0]
    assert minus_J(a).ok and hessian_criterion(a).ok and integer_solutions(a).ok


@settings(max_examples=10)
@given(chains)
def test_random_chains(W):
    a = W.atoms[0]
    assert minus_J(a).ok and hessian_criterion(a).ok and integer_solutions(a).ok and one_of_three(a).ok
