"""Sanity suites for groups, Milnor rings, B-model algebras and vanishing pairs.

Each function returns a flat dict of named booleans or counters so the CLI,
scripts and tests can print one verdict per property.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from . import linalg
from .amodel import sub_polynomial
from .milnor import ring
from .mirror import MirrorMap, is_mixed_pair
from .oracle import oracle_gmax, oracle_quotient_dim
from .polyform import InvertiblePolynomial, transpose
from .statespace import B, StateSpace, b_tensor, gmax_selection, tensor_element
from .symmetry import (GroupElement, SymmetryGroup, J_element, dual_group, enumerate_subgroups_containing, gmax,
                       is_admissible, is_SL)


def group_sanity(W: InvertiblePolynomial, G: SymmetryGroup) -> dict:
    big = gmax(W, None)
    GT = dual_group(G, W)
    return {
        "gmax_order_is_det": big.order == abs(W.determinant),
        "gmax_matches_oracle": {g.theta for g in big.elements} == oracle_gmax(W),
        "dual_involution": dual_group(GT, transpose(W)) == G,
        "J_iff_SL": is_admissible(G) == is_SL(GT),
    }


def milnor_sanity(W: InvertiblePolynomial) -> dict:
    R = ring(W)
    nf, c = R.hessian
    top = R.basis.by_degree[R.top_degree]
    return {
        "dimension_matches_oracle": R.mu == oracle_quotient_dim(W),
        "top_piece_one_dimensional": top == [R.top_monomial],
        "top_spanned_by_hessian": set(nf) == {R.top_monomial} and c != 0,
        "pairing_invertible": linalg.det(R.pairing_matrix) != 0,
    }


# ---------------------------------------------------------------- B-model algebra

def b_algebra_sanity(space: StateSpace, max_triples: int | None = None) -> dict:
    """Associativity, commutativity, unit and Frobenius identity on basis elements."""
    basis = space.basis
    unit = {space.identity(): Fraction(1)}
    single = [{e: Fraction(1)} for e in basis]
    comm = all(space.multiply(x, y) == space.multiply(y, x) for x in single for y in single)
    unital = all(space.multiply(unit, x) == x for x in single)
    triples = itertools.product(single, repeat=3)
    if max_triples is not None:
        triples = itertools.islice(triples, max_triples)
    assoc = frob = True
    for x, y, z in triples:
        xy = space.multiply(x, y)
        yz = space.multiply(y, z)
        if space.multiply(xy, z) != space.multiply(x, yz):
            assoc = False
        if space.pair(xy, z) != space.pair(x, yz):
            frob = False
    hess = all(space.hessian_product_check(g, h) for g in space.G.sorted() for h in space.G.sorted())
    return {"commutative": comm, "unital": unital, "associative": assoc, "frobenius": frob,
            "hessian_formula": hess,
            "pairing_invertible": linalg.det(space.pairing_matrix) != 0}


def tensor_sanity(B1: StateSpace, B2: StateSpace) -> bool:
    """Products in the direct construction on W1 + W2 factor through the two pieces."""
    T = b_tensor(B1, B2)
    expected = {tensor_element(a, b) for a in B1.basis for b in B2.basis}
    if set(T.basis) != expected:
        return False
    for a1, b1 in itertools.product(B1.basis, B2.basis):
        for a2, b2 in itertools.product(B1.basis, B2.basis):
            lhs = T.b_product_basis(tensor_element(a1, b1), tensor_element(a2, b2))
            p1 = B1.b_product_basis(a1, a2)
            p2 = B2.b_product_basis(b1, b2)
            rhs = {tensor_element(e, f): c * d for e, c in p1.items() for f, d in p2.items()}
            if lhs != rhs:
                return False
    return True


def change_group_sanity(W: InvertiblePolynomial, small: SymmetryGroup, big: SymmetryGroup) -> bool:
    """For small <= big in SL, products of elements common to both B-spaces agree."""
    S = StateSpace(W, small, B)
    L = StateSpace(W, big, B)
    common = [e for e in S.basis if L.contains(e)]
    for a, b in itertools.product(common, repeat=2):
        if S.b_product_basis(a, b) != L.b_product_basis(a, b):
            return False
    return True


def unprojected_sanity(space: StateSpace) -> bool:
    """Invariant products agree with products in the unprojected space of the same group."""
    U = StateSpace(space.W, space.G, B, project=False)
    return all(space.b_product_basis(a, b) == U.b_product_basis(a, b)
               for a in space.basis for b in space.basis)


def b_model_suite(W: InvertiblePolynomial, G: SymmetryGroup, max_triples: int | None = None) -> dict:
    """All B-model checks on B_{W^T, G^T}."""
    WT = transpose(W)
    GT = dual_group(G, W)
    space = StateSpace(WT, GT, B)
    out = b_algebra_sanity(space, max_triples)
    out["unprojected_agrees"] = unprojected_sanity(space)
    # nested SL subgroups of G^T
    subs = [H for H in enumerate_subgroups_containing(GT, []) if H != GT]
    out["change_group"] = all(change_group_sanity(WT, H, GT) for H in subs)
    # split off the first atom when there is more than one
    if len(WT.atoms) > 1:
        out["tensor"] = _split_tensor(WT, GT)
    return out


def supported_subgroup(G: SymmetryGroup, indices: tuple[int, ...]) -> SymmetryGroup:
    """Elements of G that vanish off ``indices``, as a group of the sub-polynomial."""
    sub = sub_polynomial(G.ambient, indices)
    elems = frozenset(GroupElement(g.coords(indices)) for g in G.elements
                      if not any(g.theta[j] for j in range(len(g)) if j not in indices))
    return SymmetryGroup(sub, elems, SymmetryGroup(sub, elems, ()).minimal_generators)


def _split_tensor(WT: InvertiblePolynomial, GT: SymmetryGroup) -> bool:
    """Split off the first atom; each factor carries the part of G^T supported on it."""
    first = tuple(sorted(WT.atoms[0].var_indices))
    rest = tuple(j for j in range(WT.n_vars) if j not in first)
    B1 = StateSpace(sub_polynomial(WT, first), supported_subgroup(GT, first), B)
    B2 = StateSpace(sub_polynomial(WT, rest), supported_subgroup(GT, rest), B)
    return tensor_sanity(B1, B2)


# ---------------------------------------------------------------- vanishing pairs

def mixed_vanishing(W: InvertiblePolynomial, G: SymmetryGroup, mm: MirrorMap | None = None) -> dict:
    """Mixed basis pairs: B-product zero, and A-side zero from the selection rule or an empty sector.

    The A-side argument only looks at the images' sectors and monomials, never
    at the transported product.
    """
    mm = mm or MirrorMap(W, G)
    J = J_element(W)
    out = {"pairs": 0, "b_zero": 0, "a_zero": 0, "by_empty_sector": 0, "by_selection": 0,
           "failures": []}
    for a in mm.B.basis:
        for b in mm.B.basis:
            if not is_mixed_pair(W, a, b):
                continue
            out["pairs"] += 1
            b_zero = not mm.B.b_product_basis(a, b)
            out["b_zero"] += b_zero
            xs, ys = mm.images[a], mm.images[b]
            a_zero = True
            how = set()
            for x in xs:
                for y in ys:
                    taus = mm.A.sectors.get(J - x.g - y.g, [])
                    if not taus:
                        how.add("empty")
                    elif all(not gmax_selection(W, (x, y, t)) for t in taus):
                        how.add("selection")
                    else:
                        a_zero = False
            out["a_zero"] += a_zero
            if a_zero:
                out["by_empty_sector"] += "empty" in how
                out["by_selection"] += "selection" in how and "empty" not in how
            if not (a_zero and b_zero):
                out["failures"].append((a, b))
    return out
