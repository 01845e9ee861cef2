"""Milnor rings Q[X]/Jac(W) of invertible polynomials and their restrictions.

A ring is built for a fixed index set ``I`` of the ambient polynomial (the
variables fixed by some group element). Internally everything uses local
exponent tuples of length ``len(I)``; ``embed``/``project`` translate.
Elements are plain dicts mapping basis exponent tuples to ``Fraction``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import linalg
from .errors import HessianNotTop, NotInvertibleShape, OracleMismatch
from .polyform import CHAIN, FERMAT, LOOP, InvertiblePolynomial, weights
from .symmetry import atom_box

MilnorElement = dict  # basis exponent tuple -> Fraction

# Pairing normalisations. "hessian_ratio": <a,b> = mu * (ab / hess); "literal":
# the top part of ab equals mu * hess * <a,b>. Only the first one makes the
# pairing-matrix and Hessian descriptions of the B-model product agree.
HESSIAN_RATIO = "hessian_ratio"
LITERAL = "literal"


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def poly_add(p: dict, q: dict, scale=1) -> dict:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + scale * c
    return {m: c for m, c in out.items() if c}


def poly_scale(p: dict, s) -> dict:
    return {m: c * s for m, c in p.items() if c * s}


def _diff(p: dict, i: int) -> dict:
    out: dict = {}
    for m, c in p.items():
        if m[i]:
            mm = list(m)
            mm[i] -= 1
            out[tuple(mm)] = out.get(tuple(mm), 0) + c * m[i]
    return {m: c for m, c in out.items() if c}


def _det_sparse(mat: list[list[dict]], n: int) -> dict:
    """Leibniz expansion for small matrices of sparse polynomials."""
    total: dict = {}
    k = len(mat)
    for perm in itertools.permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        term = {(0,) * n: Fraction(sign)}
        for i in range(k):
            term = poly_mul(term, mat[i][perm[i]])
            if not term:
                break
        total = poly_add(total, term)
    return total


def monomials_up_to(q: Sequence[Fraction], bound: Fraction) -> list[tuple[int, ...]]:
    """All exponent vectors with weighted degree <= bound."""
    out = []
    n = len(q)

    def rec(i, cur, deg):
        if i == n:
            out.append(tuple(cur))
            return
        e = 0
        while deg + e * q[i] <= bound:
            cur.append(e)
            rec(i + 1, cur, deg + e * q[i])
            cur.pop()
            e += 1
    rec(0, [], Fraction(0))
    return out


@dataclass(frozen=True)
class MilnorBasis:
    monomials: tuple[tuple[int, ...], ...]
    by_degree: dict


class MilnorRing:
    """Milnor ring of ``W`` restricted to the index set ``I`` (default: all)."""

    def __init__(self, W: InvertiblePolynomial, indices: Iterable[int] | None = None,
                 convention: str = HESSIAN_RATIO):
        self.W = W
        self.indices = tuple(sorted(range(W.n_vars) if indices is None else set(indices)))
        self.convention = convention
        n = len(self.indices)
        rows = W.restrict_rows(self.indices)
        if len(rows) != n:
            raise NotInvertibleShape(
                f"restriction of {W} to {self.indices} has {len(rows)} monomials for {n} variables")
        pos = {j: k for k, j in enumerate(self.indices)}
        self.local_matrix = [[W.exponent_matrix[r][j] for j in self.indices] for r in rows]
        if n:
            names = [W.variable_names[j] for j in self.indices]
            self.poly = InvertiblePolynomial.from_matrix(self.local_matrix, names)
            q_all = weights(W).q
            self.q = tuple(q_all[j] for j in self.indices)
            assert self.q == weights(self.poly).q
        else:
            self.poly = None
            self.q = ()
        self.n = n
        self.top_degree = sum((1 - 2 * x for x in self.q), Fraction(0))
        self._pos = pos

    # ---- structure

    @cached_property
    def atoms(self):
        return self.poly.atoms if self.poly else ()

    @cached_property
    def h(self) -> tuple[int, ...]:
        if not self.n:
            return ()
        return weights(self.poly).h

    @cached_property
    def basis(self) -> MilnorBasis:
        if not self.n:
            mons = [()]
        else:
            parts = []
            for atom in self.atoms:
                parts.append([(atom, b) for b in atom_box(atom)])
            mons = []
            for combo in itertools.product(*parts):
                e = [0] * self.n
                for atom, b in combo:
                    for k, v in zip(atom.var_indices, b):
                        e[k] = v
                mons.append(tuple(e))
            mons.sort(key=lambda m: (self.degree(m), m))
        by_deg: dict = {}
        for m in mons:
            by_deg.setdefault(self.degree(m), []).append(m)
        return MilnorBasis(tuple(mons), by_deg)

    @property
    def monomials(self) -> tuple[tuple[int, ...], ...]:
        return self.basis.monomials

    @cached_property
    def index_of(self) -> dict:
        return {m: k for k, m in enumerate(self.monomials)}

    @property
    def mu(self) -> int:
        return len(self.monomials)

    def degree(self, m: Sequence[int]) -> Fraction:
        return sum((e * x for e, x in zip(m, self.q)), Fraction(0))

    @cached_property
    def jacobian(self) -> list[dict]:
        if not self.n:
            return []
        W = {tuple(r): Fraction(1) for r in self.local_matrix}
        return [_diff(W, i) for i in range(self.n)]

    @cached_property
    def normal_form_table(self) -> dict:
        """Reduction of every monomial of degree <= top onto the basis span."""
        table: dict = {}
        if not self.n:
            table[()] = {(): Fraction(1)}
            return table
        basis_set = set(self.monomials)
        mons = monomials_up_to(self.q, self.top_degree)
        by_deg: dict = {}
        for m in mons:
            by_deg.setdefault(self.degree(m), []).append(m)
        jac_deg = [1 - x for x in self.q]
        for deg, ms in by_deg.items():
            non_basis = sorted(m for m in ms if m not in basis_set)
            basis = sorted(m for m in ms if m in basis_set)
            for m in basis:
                table[m] = {m: Fraction(1)}
            if not non_basis:
                continue
            cols = non_basis + basis
            col_of = {m: k for k, m in enumerate(cols)}
            relations = []
            for i in range(self.n):
                dd = deg - jac_deg[i]
                if dd < 0:
                    continue
                for m in by_deg.get(dd, []):
                    rel = poly_mul({m: Fraction(1)}, self.jacobian[i])
                    row = [Fraction(0)] * len(cols)
                    for mm, c in rel.items():
                        row[col_of[mm]] += c
                    relations.append(row)
            red, piv = linalg.rref(relations) if relations else ([], [])
            if piv != list(range(len(non_basis))):
                raise OracleMismatch(
                    f"basis of {self.describe()} is not a complement of the Jacobian ideal in degree {deg}")
            nb = len(non_basis)
            for k, m in enumerate(non_basis):
                row = red[k]
                table[m] = {basis[j]: -row[nb + j] for j in range(len(basis)) if row[nb + j]}
        return table

    def describe(self) -> str:
        if not self.n:
            return "0"
        return str(self.poly)

    # ---- arithmetic

    def normal_form(self, m: Sequence[int]) -> MilnorElement:
        m = tuple(m)
        if self.degree(m) > self.top_degree:
            return {}
        return dict(self.normal_form_table[m])

    def reduce(self, p: dict) -> MilnorElement:
        out: dict = {}
        for m, c in p.items():
            if self.degree(m) > self.top_degree:
                continue
            for b, v in self.normal_form_table[m].items():
                out[b] = out.get(b, 0) + c * v
        return {b: v for b, v in out.items() if v}

    def multiply(self, u: MilnorElement, v: MilnorElement) -> MilnorElement:
        return self.reduce(poly_mul(u, v))

    def one(self) -> MilnorElement:
        return {(0,) * self.n: Fraction(1)}

    def monomial(self, m: Sequence[int]) -> MilnorElement:
        return self.normal_form(m)

    def vector(self, u: MilnorElement) -> list[Fraction]:
        v = [Fraction(0)] * self.mu
        for m, c in u.items():
            v[self.index_of[m]] += c
        return v

    def element(self, vec: Sequence) -> MilnorElement:
        return {m: Fraction(c) for m, c in zip(self.monomials, vec) if c}

    # ---- Hessian and pairing

    @cached_property
    def hessian_polynomial(self) -> dict:
        if not self.n:
            return {(): Fraction(1)}
        W = {tuple(r): Fraction(1) for r in self.local_matrix}
        total = {(0,) * self.n: Fraction(1)}
        for atom in self.atoms:
            idx = atom.var_indices
            mat = [[_diff(self.jacobian[i], j) for j in idx] for i in idx]
            total = poly_mul(total, _det_sparse(mat, self.n))
        return total

    @cached_property
    def hessian(self) -> tuple[MilnorElement, Fraction]:
        """hess(W) in normal form together with c such that hess = c * X^(h-1)."""
        nf = self.reduce(self.hessian_polynomial)
        top = self.top_monomial
        if set(nf) != {top}:
            raise HessianNotTop(f"Hessian of {self.describe()} reduces to {nf}")
        return nf, nf[top]

    @cached_property
    def top_monomial(self) -> tuple[int, ...]:
        if not self.n:
            return ()
        t = tuple(x - 1 for x in self.h)
        if self.degree(t) != self.top_degree:
            raise HessianNotTop(f"X^(h-1) is not of top degree for {self.describe()}")
        tops = self.basis.by_degree.get(self.top_degree, [])
        if tops != [t]:
            raise HessianNotTop(f"top piece of {self.describe()} is spanned by {tops}")
        return t

    @property
    def hessian_constant(self) -> Fraction:
        return self.hessian[1]

    def top_coefficient(self, u: MilnorElement) -> Fraction:
        return u.get(self.top_monomial, Fraction(0))

    def residue(self, u: MilnorElement) -> Fraction:
        """Linear functional u -> <u, 1>."""
        c = self.hessian_constant
        if self.convention == LITERAL:
            return self.top_coefficient(u) / (self.mu * c)
        return self.mu * self.top_coefficient(u) / c

    def residue_pairing(self, u: MilnorElement, v: MilnorElement) -> Fraction:
        return self.residue(self.multiply(u, v))

    @cached_property
    def pairing_matrix(self) -> linalg.Matrix:
        mons = self.monomials
        return [[self.residue(self.normal_form(tuple(a + b for a, b in zip(m1, m2))))
                 for m2 in mons] for m1 in mons]

    @cached_property
    def inverse_pairing(self) -> linalg.Matrix:
        return linalg.inverse(self.pairing_matrix)

    # ---- index bookkeeping

    def embed(self, m: Sequence[int]) -> tuple[int, ...]:
        """Local exponent tuple -> global exponent tuple of the ambient polynomial."""
        out = [0] * self.W.n_vars
        for k, j in enumerate(self.indices):
            out[j] = m[k]
        return tuple(out)

    def project(self, m: Sequence[int]) -> tuple[int, ...] | None:
        """Global exponent tuple -> local one, or None if it uses other variables."""
        if any(e for j, e in enumerate(m) if j not in self._pos):
            return None
        return tuple(m[j] for j in self.indices)

    def restrict_to(self, other: "MilnorRing", u: MilnorElement) -> MilnorElement:
        """Set the variables missing from ``other`` to zero and reduce there."""
        out: dict = {}
        for m, c in u.items():
            g = self.embed(m)
            loc = other.project(g)
            if loc is not None:
                out[loc] = out.get(loc, 0) + c
        return other.reduce(out)

    def format_monomial(self, m: Sequence[int]) -> str:
        if not self.n:
            return "1"
        names = [self.W.variable_names[j] for j in self.indices]
        parts = [f"{x}^{e}" for x, e in zip(names, m)]
        return "*".join(parts)

    def format_element(self, u: MilnorElement) -> str:
        if not u:
            return "0"
        return " + ".join(f"{c}*{self.format_monomial(m)}" for m, c in sorted(u.items()))


@lru_cache(maxsize=None)
def ring(W: InvertiblePolynomial, indices: tuple[int, ...] | None = None,
         convention: str = HESSIAN_RATIO) -> MilnorRing:
    return MilnorRing(W, indices, convention)


def basis(W: InvertiblePolynomial) -> MilnorBasis:
    return ring(W).basis


def normal_form(m: Sequence[int], W: InvertiblePolynomial) -> MilnorElement:
    return ring(W).normal_form(m)


def multiply(u: MilnorElement, v: MilnorElement, W: InvertiblePolynomial) -> MilnorElement:
    return ring(W).multiply(u, v)


def hessian(W: InvertiblePolynomial) -> tuple[MilnorElement, Fraction]:
    return ring(W).hessian


def residue_pairing(u: MilnorElement, v: MilnorElement, W: InvertiblePolynomial) -> Fraction:
    return ring(W).residue_pairing(u, v)


def restrict(W: InvertiblePolynomial, indices: Iterable[int]) -> MilnorRing:
    return ring(W, tuple(sorted(set(indices))))


def closed_form_mu(W: InvertiblePolynomial) -> int:
    """Product over atoms of the textbook dimension formulas (chains: alternating sum)."""
    total = 1
    for atom in W.atoms:
        a = atom.exponents
        if atom.kind == FERMAT:
            total *= a[0] - 1
        elif atom.kind == LOOP:
            p = 1
            for x in a:
                p *= x
            total *= p
        else:
            s = 0
            n = len(a)
            for i in range(0, n, 2):  # odd positions 1, 3, ...
                p = a[i] - 1
                for j in range(i + 1, n):
                    p *= a[j]
                s += p
            total *= s
    return total
