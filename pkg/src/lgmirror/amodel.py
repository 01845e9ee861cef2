"""Genus-zero three-point A-model correlators from the axioms alone.

Nothing here touches moduli spaces. A correlator is evaluated with the
sector (line bundle degree) rule, the G^max selection rule, the pairing
axiom, decoupled sums with change of group, and the narrow product rule on
atoms. Anything those rules cannot settle comes back as ``None``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .milnor import ring
from .polyform import InvertiblePolynomial
from .statespace import SectorElement, StateSpace, gmax_selection, invariant
from .symmetry import (GroupElement, J_element, SymmetryGroup, atom_box, fixed_indices,
                       gmax, is_narrow, closure)


@lru_cache(maxsize=None)
def sub_polynomial(W: InvertiblePolynomial, indices: tuple[int, ...]) -> InvertiblePolynomial:
    rows = W.restrict_rows(indices)
    assert len(rows) == len(indices)
    m = [[W.exponent_matrix[r][j] for j in indices] for r in rows]
    return InvertiblePolynomial.from_matrix(m, [W.variable_names[j] for j in indices])


def restrict_element(e: SectorElement, indices: Sequence[int]) -> SectorElement:
    return SectorElement(GroupElement(e.g.coords(indices)), tuple(e.m[j] for j in indices))


def project_group(H: SymmetryGroup, indices: tuple[int, ...]) -> SymmetryGroup:
    Wsub = sub_polynomial(H.ambient, indices)
    elems = frozenset(GroupElement(g.coords(indices)) for g in H.elements)
    g0 = SymmetryGroup(Wsub, elems, ())
    return SymmetryGroup(Wsub, elems, g0.minimal_generators)


@lru_cache(maxsize=None)
def _gmax_gens(W: InvertiblePolynomial):
    return gmax(W, max_order=None).minimal_generators


def _pairing(W: InvertiblePolynomial, a: SectorElement, b: SectorElement) -> Fraction:
    if b.g != -a.g:
        return Fraction(0)
    R = ring(W, fixed_indices(a.g))
    return R.residue_pairing({R.project(a.m): Fraction(1)}, {R.project(b.m): Fraction(1)})


@lru_cache(maxsize=None)
def _box_representatives(W: InvertiblePolynomial) -> dict:
    """Nonzero narrow group elements -> box vectors beta with [M^{-1}(beta+1)] = g."""
    box = itertools.product(*(range(x) for x in W.exponents))
    out: dict = {}
    for beta in box:
        g = GroupElement(tuple(linalg.solve(W.matrix(), [b + 1 for b in beta])))
        if is_narrow(g):
            out.setdefault(g, []).append(beta)
    return out


def _atomic_narrow(W: InvertiblePolynomial, triple: Sequence[SectorElement]) -> Fraction | None:
    if not all(is_narrow(e.g) for e in triple):
        return None
    reps = _box_representatives(W)
    a = W.exponents
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for beta in reps.get(triple[i].g, []):
            for gamma in reps.get(triple[j].g, []):
                if all(b + c <= x - 1 for b, c, x in zip(beta, gamma, a)):
                    return Fraction(1)
    return None


def correlator(W: InvertiblePolynomial, H: SymmetryGroup,
               triple: Sequence[SectorElement]) -> Fraction | None:
    triple = tuple(triple)
    n = W.n_vars
    J = J_element(W)
    if triple[0].g + triple[1].g + triple[2].g != J:
        return Fraction(0)
    if not gmax_selection(W, triple):
        return Fraction(0)
    unit = SectorElement(J, (0,) * n)
    for k in range(3):
        if triple[k] == unit:
            rest = [triple[i] for i in range(3) if i != k]
            return _pairing(W, rest[0], rest[1])
    atoms = W.atoms
    if len(atoms) == 1:
        gens = _gmax_gens(W)
        if all(invariant(e.m, e.g, gens) for e in triple):
            return _atomic_narrow(W, triple)
        return None

    parts = []
    for atom in atoms:
        idx = tuple(sorted(atom.var_indices))
        Wk = sub_polynomial(W, idx)
        pe = tuple(restrict_element(e, idx) for e in triple)
        inv = [invariant(e.m, e.g, _gmax_gens(Wk)) for e in pe]
        parts.append((idx, Wk, pe, inv))
        if sum(inv) == 2:
            return Fraction(0)

    # decoupled sums after enlarging H to the product of its projections
    factors = []
    for idx, Wk, pe, _ in parts:
        Hk = project_group(H, idx)
        if not all(invariant(e.m, e.g, Hk.minimal_generators) for e in pe):
            break
        factors.append((Wk, Hk, pe))
    else:
        total = Fraction(1)
        for Wk, Hk, pe in factors:
            c = correlator(Wk, Hk, pe)
            if c is None:
                return None
            total *= c
            if total == 0:
                return total
        return total

    # break off one atom whose three parts are G^max invariant
    for idx, Wk, pe, inv in parts:
        if all(inv):
            rest_idx = tuple(j for j in range(n) if j not in idx)
            c1 = correlator(Wk, gmax(Wk, max_order=None), pe)
            if c1 == 0:
                return Fraction(0)
            Wr = sub_polynomial(W, rest_idx)
            Hr = project_group(H, rest_idx)
            c2 = correlator(Wr, Hr, tuple(restrict_element(e, rest_idx) for e in triple))
            if c1 is None or c2 is None:
                return Fraction(0) if c2 == 0 else None
            return c1 * c2
    return None


def break_off_vanishes(W: InvertiblePolynomial, triple: Sequence[SectorElement],
                       indices: Sequence[int]) -> bool | None:
    """Necessary conditions for a correlator to survive splitting off the variables ``indices``.

    True: forced to vanish. False: the conditions hold (or do not apply).
    None: the split-off factor could not be evaluated.
    """
    idx = tuple(sorted(indices))
    P1 = sub_polynomial(W, idx)
    pe = tuple(restrict_element(e, idx) for e in triple)
    gens = _gmax_gens(P1)
    inv = [invariant(e.m, e.g, gens) for e in pe]
    if sum(inv) < 2:
        return False
    if sum(inv) == 2:
        return True
    c = correlator(P1, gmax(P1, max_order=None), pe)
    if c is None:
        return None
    return c == 0


def a_product(space: StateSpace, x: dict, y: dict):
    """Product of two combinations in the A-model computed from axiomatic correlators.

    Returns None when some needed correlator is not determined by the axioms.
    """
    W, G = space.W, space.G
    J = J_element(W)
    inv = space.inverse_pairing
    out: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            target = J - a.g - b.g
            for tau in space.sectors.get(target, []):
                c = correlator(W, G, (a, b, tau))
                if c is None:
                    return None
                if c == 0:
                    continue
                t = space.index[tau]
                for sigma in space.sectors.get(-target, []):
                    s = space.index[sigma]
                    if inv[t][s]:
                        out[sigma] = ca * cb * c * inv[t][s] + out.get(sigma, 0)
    return {e: c for e, c in out.items() if c != 0}
