"""A- and B-model state spaces, sector pairings, the B-model product and
A-model selection rules."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .errors import NotAdmissible, NotSL
from .milnor import HESSIAN_RATIO, MilnorRing, ring
from .polyform import InvertiblePolynomial, direct_sum, weights
from .symmetry import (GroupElement, SymmetryGroup, J_element, fixed_indices, generate,
                       is_admissible, is_narrow, is_SL, rho_generators)

A, B = "A", "B"


@dataclass(frozen=True, order=True)
class SectorElement:
    """Basis element [[X^m]]_g; ``m`` is a global exponent vector supported on I_g."""

    g: GroupElement
    m: tuple[int, ...]

    @property
    def fixed(self) -> tuple[int, ...]:
        return fixed_indices(self.g)

    def is_narrow(self) -> bool:
        return is_narrow(self.g)

    def label(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"X{j + 1}" for j in range(len(self.m))]
        mono = "*".join(f"{names[j]}^{e}" if e > 1 else names[j]
                        for j, e in enumerate(self.m) if e) or "1"
        return f"[[{mono}]]_{self.g}"

    def to_json(self):
        return {"sector": self.g.to_json(), "monomial": list(self.m)}


def invariant(m: Sequence[int], g: GroupElement, gens: Iterable[GroupElement]) -> bool:
    """Is X^m dX_{I_g} invariant under every element of ``gens``?"""
    fixed = fixed_indices(g)
    for h in gens:
        s = sum(((m[j] + 1) * h.theta[j] for j in fixed), Fraction(0))
        if s.denominator != 1:
            return False
    return True


class StateSpace:
    """Projected (or unprojected) state space of a pair (W, G)."""

    def __init__(self, W: InvertiblePolynomial, G: SymmetryGroup, flavor: str,
                 project: bool = True, convention: str = HESSIAN_RATIO, check: bool = True):
        self.W = W
        self.G = G
        self.flavor = flavor
        self.project = project
        self.convention = convention
        if check and flavor == A and not is_admissible(G):
            raise NotAdmissible("an A-model group must contain J")
        if check and flavor == B and not is_SL(G):
            raise NotSL("a B-model group must lie in SL")
        gens = G.minimal_generators
        self.sectors: dict[GroupElement, list[SectorElement]] = {}
        for g in G.sorted():
            R = self.ring(g)
            els = []
            for mono in R.monomials:
                gm = R.embed(mono)
                if not project or invariant(gm, g, gens):
                    els.append(SectorElement(g, gm))
            self.sectors[g] = els
        self.basis: list[SectorElement] = [e for g in G.sorted() for e in self.sectors[g]]
        self.index = {e: k for k, e in enumerate(self.basis)}
        self._estar_cache: dict = {}

    # ---- basics

    def ring(self, g: GroupElement | Sequence[int]) -> MilnorRing:
        idx = fixed_indices(g) if isinstance(g, GroupElement) else tuple(sorted(g))
        return ring(self.W, tuple(idx), self.convention)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def sector_dims(self) -> dict[GroupElement, int]:
        return {g: len(v) for g, v in self.sectors.items()}

    def local(self, e: SectorElement) -> tuple[int, ...]:
        return self.ring(e.g).project(e.m)

    def contains(self, e: SectorElement) -> bool:
        return e in self.index

    def identity(self) -> SectorElement:
        """Unit of the algebra: [[1]]_J for A, [[1]]_0 for B."""
        g = J_element(self.W) if self.flavor == A else GroupElement.zero(self.W.n_vars)
        return SectorElement(g, (0,) * self.W.n_vars)

    def element_from_ring(self, g: GroupElement, u: dict) -> dict:
        """Milnor element of Q_{W_g} -> combination of sector basis elements."""
        R = self.ring(g)
        out: dict = {}
        for mono, c in u.items():
            out[SectorElement(g, R.embed(mono))] = c
        return out

    # ---- pairing

    def pairing(self, a: SectorElement, b: SectorElement) -> Fraction:
        if b.g != -a.g:
            return Fraction(0)
        R = self.ring(a.g)
        return R.residue_pairing({R.project(a.m): Fraction(1)}, {R.project(b.m): Fraction(1)})

    def pair(self, x: dict, y: dict):
        total = 0
        for a, ca in x.items():
            for b, cb in y.items():
                p = self.pairing(a, b)
                if p:
                    total = ca * cb * p + total
        return total

    @cached_property
    def pairing_matrix(self) -> linalg.Matrix:
        return [[self.pairing(a, b) for b in self.basis] for a in self.basis]

    @cached_property
    def inverse_pairing(self) -> linalg.Matrix:
        return linalg.inverse(self.pairing_matrix)

    # ---- B-model product

    def e_star(self, I_gh: tuple[int, ...], I_s: tuple[int, ...]) -> linalg.Matrix:
        """Matrix of eta#_{s} o e^v o eta-flat_{gh}: Q_{gh} -> Q_s (columns = Q_gh basis)."""
        key = (I_gh, I_s)
        if key not in self._estar_cache:
            Rgh = self.ring(I_gh)
            Rs = self.ring(I_s)
            # <e*(x), y>_s = <x, e(y)>_gh for all y in Q_s
            rhs = []
            for x in Rgh.monomials:
                ex = {x: Fraction(1)}
                row = [Rgh.residue_pairing(ex, Rs.restrict_to(Rgh, {y: Fraction(1)})) for y in Rs.monomials]
                rhs.append(row)
            # coefficients c with sum_k c_k <b_k, y_l>_s = rhs_l, i.e. P^T c = rhs
            P = Rs.pairing_matrix
            Pinv = Rs.inverse_pairing
            cols = []
            for row in rhs:
                cols.append([sum((row[l] * Pinv[l][k] for l in range(len(row))), Fraction(0))
                             for k in range(len(Rs.monomials))])
            self._estar_cache[key] = linalg.transpose(cols)
            assert all(
                sum((cols[i][k] * P[k][l] for k in range(len(P))), Fraction(0)) == rhs[i][l]
                for i in range(len(rhs)) for l in range(len(P)))
        return self._estar_cache[key]

    def index_condition(self, g: GroupElement, h: GroupElement) -> bool:
        s = g + h
        cover = set(fixed_indices(g)) | set(fixed_indices(h)) | set(fixed_indices(s))
        return len(cover) == self.W.n_vars

    def b_product_basis(self, a: SectorElement, b: SectorElement) -> dict:
        """Product of two basis elements (B-model), as {SectorElement: Fraction}."""
        g, h = a.g, b.g
        if not self.index_condition(g, h):
            return {}
        s = g + h
        Ig, Ih, Is = fixed_indices(g), fixed_indices(h), fixed_indices(s)
        Igh = tuple(sorted(set(Ig) & set(Ih)))
        Rg, Rh, Rgh, Rs = self.ring(Ig), self.ring(Ih), self.ring(Igh), self.ring(Is)
        eg = Rg.restrict_to(Rgh, {Rg.project(a.m): Fraction(1)})
        eh = Rh.restrict_to(Rgh, {Rh.project(b.m): Fraction(1)})
        prod = Rgh.multiply(eg, eh)
        if not prod:
            return {}
        E = self.e_star(Igh, Is)
        vec = Rgh.vector(prod)
        out_vec = linalg.matvec(E, vec)
        return {SectorElement(s, Rs.embed(mono)): c
                for mono, c in zip(Rs.monomials, out_vec) if c}

    def multiply(self, x: dict, y: dict) -> dict:
        """Bilinear B-model product of combinations of basis elements."""
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for e, c in self.b_product_basis(a, b).items():
                    out[e] = ca * cb * c + out.get(e, 0)
        return {e: c for e, c in out.items() if c != 0}

    def hessian_product_check(self, g: GroupElement, h: GroupElement) -> bool:
        """mu_s * hess(W_gh) * e*(1) == mu_gh * hess(W_s) inside Q_s."""
        if not self.index_condition(g, h):
            return True
        s = g + h
        Igh = tuple(sorted(set(fixed_indices(g)) & set(fixed_indices(h))))
        Is = fixed_indices(s)
        Rgh, Rs = self.ring(Igh), self.ring(Is)
        estar1 = Rs.element(linalg.matvec(self.e_star(Igh, Is), Rgh.vector(Rgh.one())))
        hess_gh = {}
        for mono, c in Rgh.hessian_polynomial.items():
            loc = Rs.project(Rgh.embed(mono))
            hess_gh[loc] = hess_gh.get(loc, 0) + c
        lhs = Rs.multiply(Rs.reduce(hess_gh), estar1)
        lhs = {m: c * Rs.mu for m, c in lhs.items()}
        rhs = {m: c * Rgh.mu for m, c in Rs.hessian[0].items()}
        return {m: c for m, c in lhs.items() if c} == {m: c for m, c in rhs.items() if c}


def build_state_space(W: InvertiblePolynomial, G: SymmetryGroup, flavor: str,
                      project: bool = True, convention: str = HESSIAN_RATIO) -> StateSpace:
    return StateSpace(W, G, flavor, project, convention)


def sector_pairing(space: StateSpace, a: SectorElement, b: SectorElement) -> Fraction:
    return space.pairing(a, b)


def b_product(a: SectorElement, b: SectorElement, space: StateSpace) -> dict:
    return space.b_product_basis(a, b)


def b_tensor(B1: StateSpace, B2: StateSpace) -> StateSpace:
    """Direct construction on W1 + W2 with the product group."""
    W = direct_sum(B1.W, B2.W)
    n1 = B1.W.n_vars
    gens = [GroupElement(g.theta + (Fraction(0),) * B2.W.n_vars) for g in B1.G.minimal_generators]
    gens += [GroupElement((Fraction(0),) * n1 + g.theta) for g in B2.G.minimal_generators]
    G = generate(W, gens, max_order=None)
    return StateSpace(W, G, B1.flavor, B1.project and B2.project, B1.convention)


def tensor_element(a: SectorElement, b: SectorElement) -> SectorElement:
    return SectorElement(GroupElement(a.g.theta + b.g.theta), a.m + b.m)


# ---------------------------------------------------------------- A-model rules

def line_bundle_degrees(W: InvertiblePolynomial, gs: Sequence[GroupElement]) -> list[Fraction]:
    q = weights(W).q
    return [q[j] - sum(g.theta[j] for g in gs) for j in range(W.n_vars)]


def lbd_vanishes(W: InvertiblePolynomial, gs: Sequence[GroupElement]) -> bool:
    return any(l.denominator != 1 for l in line_bundle_degrees(W, gs))


def sector_additive(g1: GroupElement, g2: GroupElement, g3: GroupElement, J: GroupElement) -> bool:
    return g3 == J - g1 - g2


def gmax_selection(W: InvertiblePolynomial, triple: Sequence[SectorElement]) -> bool:
    """True unless the G^max-invariance selection rule forces the correlator to vanish."""
    rhos, _ = rho_generators(W)
    for h in rhos:
        total = Fraction(0)
        for e in triple:
            for j in fixed_indices(e.g):
                total += (e.m[j] + 1) * h.theta[j]
        if total.denominator != 1:
            return False
    return True


class _Undefined:
    def __repr__(self):
        return "Undefined"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


def group_of_exponents(W: InvertiblePolynomial, beta: Sequence[int]) -> GroupElement:
    """[M^{-1}(beta + 1)]."""
    return GroupElement(tuple(linalg.solve(W.matrix(), [b + 1 for b in beta])))


def narrow_a_product(W: InvertiblePolynomial, beta: Sequence[int], gamma: Sequence[int]):
    """[[1]]_{M^-1(beta+1)} * [[1]]_{M^-1(gamma+1)} when the narrow product rule applies.

    Returns the target group element, or UNDEFINED when an input or the target
    is not narrow, or when beta + gamma exceeds a - 1 somewhere.
    """
    a = W.exponents
    g1, g2 = group_of_exponents(W, beta), group_of_exponents(W, gamma)
    if not (is_narrow(g1) and is_narrow(g2)):
        return UNDEFINED
    total = [b + c for b, c in zip(beta, gamma)]
    if any(t > x - 1 for t, x in zip(total, a)):
        return UNDEFINED
    target = group_of_exponents(W, total)
    if not is_narrow(target):
        return UNDEFINED
    return target
