from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings

from lgmirror.errors import DegenerateRescaling, MixedPair, Property1Violation
from lgmirror.mirror import (PRINTED, MirrorMap, check_property1, is_fundamental, is_mixed_pair,
                             mirror_map, nice_split, pair_split, rescaling_constants, verify_isomorphism)
from lgmirror.polyform import FERMAT, parse_polynomial
from lgmirror.statespace import SectorElement, sector_additive
from lgmirror.symmetry import GroupElement, J_group, enumerate_admissible_subgroups, generate, gmax
from strategies import small_pairs


def ge(*xs):
    return GroupElement(tuple(F(x) for x in xs))


def el(g, m):
    return SectorElement(g, tuple(m))


def zero(n):
    return ge(*([0] * n))


def single(image):
    assert len(image) == 1
    (k, v), = image.items()
    return k, v


# ---------------------------------------------------------------- property 1 / rescaling

def test_property1_holds_for_single_atoms():
    W = parse_polynomial("x^2*y+y^2*x")
    for G in enumerate_admissible_subgroups(W):
        assert check_property1(W, G)[0]


def test_property1_violation_has_witnesses():
    W = parse_polynomial("x^3+y^2*z+z^3")
    G = generate(W, [ge("1/3", "5/6", "1/3")])
    ok, wit = check_property1(W, G)
    assert not ok
    sides = {(side, g) for side, g, _ in wit}
    assert ("A", ge(0, "1/2", 0)) in sides
    assert ("B", ge("1/3", 0, "2/3")) in sides
    with pytest.raises(Property1Violation) as exc:
        verify_isomorphism(W, G)
    assert exc.value.witnesses


def test_fundamental_pairs():
    W = parse_polynomial("x^3")
    assert is_fundamental(W, gmax(W))
    assert is_fundamental(parse_polynomial("x^2*y+y^2*x"), gmax(parse_polynomial("x^2*y+y^2*x")))
    W = parse_polynomial("x^3+y^2*z+z^2*y")
    assert not is_fundamental(W, gmax(W))


def test_rescaling_constants_cubic():
    W = parse_polynomial("x^3")
    assert rescaling_constants(W) == (1, F(1, 3), 1, F(1, 3))


def test_printed_rescaling_is_degenerate():
    with pytest.raises(DegenerateRescaling):
        rescaling_constants(parse_polynomial("x^3"), PRINTED)


def test_square_fermat_is_guarded():
    W = parse_polynomial("x^2")
    with pytest.raises(DegenerateRescaling):
        rescaling_constants(W)
    with pytest.raises(DegenerateRescaling):
        MirrorMap(W, gmax(W))


def test_printed_rescaling_degenerate_on_loop():
    with pytest.raises(DegenerateRescaling):
        rescaling_constants(parse_polynomial("x^2*y+y^2*x"), PRINTED)


# ---------------------------------------------------------------- the map

@pytest.mark.parametrize("text", ["x^3", "x^3+y^3", "x^2*y+y^2*x", "x^2*y+y^3", "x^3+y^2*z+z^2*y"])
def test_identity_goes_to_J(text):
    W = parse_polynomial(text)
    for G in enumerate_admissible_subgroups(W):
        if not check_property1(W, G)[0]:
            continue
        mm = MirrorMap(W, G)
        k, v = single(mm.images[mm.B.identity()])
        assert k == mm.A.identity()
        assert v.rational() == 1


def test_two_cubics_dual_element():
    W = parse_polynomial("x^3+y^3")
    mm = MirrorMap(W, J_group(W))
    k, v = single(mm.images[el(ge("1/3", "2/3"), (0, 0))])
    assert k == el(zero(2), (0, 1))
    # r_A^{-1} with r_A^1 = 1/3 on the y factor
    assert v.rational() == 3


def test_mirror_map_function_matches_table():
    W = parse_polynomial("x^3+y^3")
    G = J_group(W)
    mm = MirrorMap(W, G)
    for b in mm.B.basis:
        img = mirror_map(b, W, G)
        assert set(img) == set(mm.images[b])


def test_mixed_element_image_is_twisted_times_untwisted():
    W = parse_polynomial("x^3+y^2*z+z^2*y")
    mm = MirrorMap(W, gmax(W))
    k, _ = single(mm.images[el(zero(3), (0, 0, 1))])
    assert k.g == ge("1/3", 0, 0)
    assert k.m == (0, 0, 1)


def test_cubic_transported_product_into_empty_sector():
    W = parse_polynomial("x^3")
    mm = MirrorMap(W, gmax(W))
    h = el(ge("2/3"), (0,))
    assert mm.transported_a_product({h: 1}, {h: 1}) == {}


def test_two_cubics_transported_narrow_product():
    W = parse_polynomial("x^3+y^3")
    mm = MirrorMap(W, gmax(W))
    a, b = el(ge("2/3", "1/3"), (0, 0)), el(ge("1/3", "2/3"), (0, 0))
    k, v = single(mm.transported_a_product({a: 1}, {b: 1}))
    assert k == el(ge("2/3", "2/3"), (0, 0))
    assert v.rational() == 1


def test_unit_acts_as_unit_after_transport():
    W = parse_polynomial("x^2*y+y^2*x")
    mm = MirrorMap(W, gmax(W))
    one = {mm.A.identity(): 1}
    for e in mm.A.basis:
        assert mm.transported_a_product(one, {e: 1}) == {e: 1}


def test_transported_products_are_sector_additive():
    W = parse_polynomial("x^3+y^3")
    mm = MirrorMap(W, gmax(W))
    for a in mm.A.basis:
        for b in mm.A.basis:
            for c in mm.transported_a_product({a: 1}, {b: 1}):
                assert sector_additive(a.g, b.g, -c.g, mm.A.identity().g)


def test_even_loop_flags_ambiguous_vectors():
    W = parse_polynomial("x^2*y+y^2*x")
    mm = MirrorMap(W, J_group(W))
    assert len(mm.ambiguous) == 2
    assert mm.is_bijective()


# ---------------------------------------------------------------- splits

def test_untwisted_pair_splits_into_singletons():
    W = parse_polynomial("x^3+y^2*z+z^2*y")
    G = gmax(W)
    mm = MirrorMap(W, G)
    a = el(zero(3), (1, 0, 0))
    b = el(zero(3), (0, 1, 0))
    assert pair_split(a, b, W, G).partition == [(0,), (1,)]
    assert nice_split(a, W, G).partition == [(0,), (1,)]
    assert a in mm.B.basis and b in mm.B.basis


def test_twisted_pair_is_one_block():
    W = parse_polynomial("x^3+y^2*z+z^2*y")
    G = J_group(W)
    t = el(ge("1/3", "1/3", "1/3"), (0, 0, 0))
    assert nice_split(t, W, G).partition == [(0, 1)]
    assert pair_split(t, t, W, G).partition == [(0, 1)]


def test_mixed_pair_routes_to_vanishing():
    W = parse_polynomial("x^3+y^2*z+z^3")
    G = J_group(W)
    mm = MirrorMap(W, G)
    mixed = [(a, b) for a in mm.B.basis for b in mm.B.basis if is_mixed_pair(W, a, b)]
    assert mixed
    for a, b in mixed:
        with pytest.raises(MixedPair):
            pair_split(a, b, W, G)
        assert mm.B.b_product_basis(a, b) == {}


# ---------------------------------------------------------------- verification

@pytest.mark.parametrize("text,group", [("x^3", "max"), ("x^3+y^3", "J"), ("x^2*y+y^2*x", "max")])
def test_verification_passes(text, group):
    W = parse_polynomial(text)
    G = gmax(W) if group == "max" else J_group(W)
    rep = verify_isomorphism(W, G)
    assert rep.ok
    assert rep.homomorphism.checked > 0
    assert rep.pairing.failed == 0
    js = rep.to_json()
    assert js["bijection"] == "pass" and js["passed"]


@pytest.mark.parametrize("seed", range(3))
def test_mutation_is_detected(seed):
    W = parse_polynomial("x^3+y^3")
    rep = verify_isomorphism(W, J_group(W), mutate_seed=seed)
    assert not rep.ok


def test_ambiguous_loop_reports_separately():
    W = parse_polynomial("x^2*y+y^2*z+z^2*w+w^2*x")
    rep = verify_isomorphism(W, J_group(W))
    assert rep.ok
    assert len(rep.ambiguous_vectors) == 2
    assert rep.homomorphism.ambiguous > 0


@settings(max_examples=8)
@given(small_pairs(max_vars=2, max_order=12))
def test_random_pairs_verify(pair):
    W, G = pair
    assume(all(a.kind != FERMAT or a.exponents != (2,) for a in W.atoms))
    if not check_property1(W, G)[0]:
        return
    rep = verify_isomorphism(W, G, axiom_checks=False)
    assert rep.ok, rep.witnesses[:3]


def test_three_chain_without_pair_split_still_verifies():
    W = parse_polynomial("x^2*y+y^2*z+z^3")
    rep = verify_isomorphism(W, J_group(W))
    assert rep.ok
    # untwisted pairs have no fundamental per-atom split here
    assert rep.routes.unknown == 4
    assert rep.pairing.failed == 0 and rep.homomorphism.failed == 0
