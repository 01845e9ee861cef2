"""Diagonal symmetry groups as finite subgroups of (Q/Z)^N."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .errors import GroupTooLarge, NoCanonicalForm, NotASymmetry
from .polyform import CHAIN, FERMAT, LOOP, AtomicSummand, InvertiblePolynomial, weights

DEFAULT_MAX_ORDER = 512


def _mod1(x) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class GroupElement:
    theta: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(_mod1(t) for t in self.theta))

    @classmethod
    def zero(cls, n: int) -> "GroupElement":
        return cls((Fraction(0),) * n)

    @classmethod
    def parse(cls, items: Sequence) -> "GroupElement":
        return cls(tuple(Fraction(str(v).strip()) for v in items))

    def __len__(self):
        return len(self.theta)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a + b for a, b in zip(self.theta, other.theta)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a - b for a, b in zip(self.theta, other.theta)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.theta))

    def scale(self, k: int) -> "GroupElement":
        return GroupElement(tuple(k * a for a in self.theta))

    def is_zero(self) -> bool:
        return not any(self.theta)

    def restrict(self, indices: Iterable[int]) -> "GroupElement":
        """Zero out every coordinate outside ``indices``."""
        keep = set(indices)
        return GroupElement(tuple(t if j in keep else Fraction(0) for j, t in enumerate(self.theta)))

    def coords(self, indices: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(self.theta[j] for j in indices)

    def to_json(self) -> list[str]:
        return [str(t) for t in self.theta]

    def __str__(self):
        return "(" + ",".join(str(t) for t in self.theta) + ")"


def fixes(W: InvertiblePolynomial, g: GroupElement) -> bool:
    return all(sum(e * t for e, t in zip(row, g.theta)).denominator == 1
               for row in W.exponent_matrix)


def fixed_indices(g: GroupElement) -> tuple[int, ...]:
    return tuple(j for j, t in enumerate(g.theta) if t == 0)


def n_fixed(g: GroupElement) -> int:
    return len(fixed_indices(g))


def is_narrow(g: GroupElement) -> bool:
    return n_fixed(g) == 0


def is_SL(g) -> bool:
    if isinstance(g, SymmetryGroup):
        return all(is_SL(h) for h in g.elements)
    return sum(g.theta).denominator == 1


def closure(gens: Iterable[GroupElement], n: int, max_order: int | None = None) -> frozenset:
    gens = [g for g in gens if not g.is_zero()]
    zero = GroupElement.zero(n)
    seen = {zero}
    queue = deque([zero])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x + g
            if y not in seen:
                seen.add(y)
                if max_order is not None and len(seen) > max_order:
                    raise GroupTooLarge(f"group order exceeds {max_order}")
                queue.append(y)
    return frozenset(seen)


@dataclass(frozen=True, eq=False)
class SymmetryGroup:
    ambient: InvertiblePolynomial
    elements: frozenset
    generators: tuple[GroupElement, ...]

    def __eq__(self, other):
        return (isinstance(other, SymmetryGroup) and self.ambient == other.ambient
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.ambient, self.elements))

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted(self) -> list[GroupElement]:
        return sorted(self.elements)

    def is_subgroup_of(self, other: "SymmetryGroup") -> bool:
        return self.elements <= other.elements

    @cached_property
    def minimal_generators(self) -> tuple[GroupElement, ...]:
        """A short generating set picked greedily from the sorted elements."""
        n = self.ambient.n_vars
        gens: list[GroupElement] = []
        span = frozenset({GroupElement.zero(n)})
        for g in sorted(self.elements, key=lambda e: (-_elem_order(e), e)):
            if g not in span:
                gens.append(g)
                span = closure(gens, n)
                if len(span) == len(self.elements):
                    break
        return tuple(gens)


def _elem_order(g: GroupElement) -> int:
    import math
    return math.lcm(*(t.denominator for t in g.theta)) if g.theta else 1


def generate(W: InvertiblePolynomial, gens: Sequence[GroupElement],
             max_order: int | None = DEFAULT_MAX_ORDER) -> SymmetryGroup:
    gens = tuple(gens)
    for g in gens:
        if len(g) != W.n_vars:
            raise NotASymmetry(f"element {g} has length {len(g)}, expected {W.n_vars}")
        if not fixes(W, g):
            raise NotASymmetry(f"element {g} does not fix {W}")
    return SymmetryGroup(W, closure(gens, W.n_vars, max_order), gens)


def rho_generators(W: InvertiblePolynomial) -> tuple[list[GroupElement], GroupElement]:
    inv = W.inverse_matrix
    n = W.n_vars
    rhos = [GroupElement(tuple(inv[i][j] for i in range(n))) for j in range(n)]
    return rhos, J_element(W)


def J_element(W: InvertiblePolynomial) -> GroupElement:
    return GroupElement(weights(W).q)


def gmax(W: InvertiblePolynomial, max_order: int | None = DEFAULT_MAX_ORDER) -> SymmetryGroup:
    rhos, _ = rho_generators(W)
    if max_order is not None and abs(W.determinant) > max_order:
        raise GroupTooLarge(f"|G^max| = {abs(W.determinant)} exceeds {max_order}")
    G = generate(W, rhos, max_order)
    assert G.order == abs(W.determinant), "G^max order differs from |det M|"
    return G


def trivial_group(W: InvertiblePolynomial) -> SymmetryGroup:
    return generate(W, [])


def J_group(W: InvertiblePolynomial) -> SymmetryGroup:
    return generate(W, [J_element(W)])


def is_admissible(G: SymmetryGroup) -> bool:
    return J_element(G.ambient) in G


def _pairing_integral(g: GroupElement, M, b: GroupElement) -> bool:
    n = len(g.theta)
    s = sum(g.theta[i] * M[i][j] * b.theta[j] for i in range(n) for j in range(n))
    return s.denominator == 1


def dual_group(G: SymmetryGroup, W: InvertiblePolynomial | None = None,
               full_check: bool = False) -> SymmetryGroup:
    """The dual group inside G^max of the transpose polynomial.

    Integrality of g^T M b is a scalar condition; testing it on generators of G
    suffices by bilinearity. ``full_check`` re-tests every element.
    """
    from .polyform import transpose
    W = W or G.ambient
    WT = transpose(W)
    M = W.exponent_matrix
    big = gmax(WT, max_order=None)
    tests = G.minimal_generators if G.order > 1 else ()
    elems = [g for g in big.sorted() if all(_pairing_integral(g, M, b) for b in tests)]
    if full_check:
        elems2 = [g for g in big.sorted() if all(_pairing_integral(g, M, b) for b in G.elements)]
        assert elems == elems2
    res = SymmetryGroup(WT, frozenset(elems), ())
    return SymmetryGroup(WT, res.elements, res.minimal_generators)


def enumerate_subgroups_containing(G: SymmetryGroup, base: Sequence[GroupElement],
                                   max_order: int = DEFAULT_MAX_ORDER) -> list[SymmetryGroup]:
    """All subgroups of ``G`` containing ``base``; breadth first over one-element extensions."""
    if G.order > max_order:
        raise GroupTooLarge(f"|G| = {G.order} exceeds {max_order}")
    W = G.ambient
    n = W.n_vars
    base = [b for b in base if not b.is_zero()]
    start = closure(base, n)
    found = {start}
    queue = deque([(start, base)])
    while queue:
        H, gens = queue.popleft()
        for g in G.sorted():
            if g in H:
                continue
            H2 = closure(gens + [g], n)
            if H2 not in found:
                found.add(H2)
                queue.append((H2, gens + [g]))
    out = []
    for H in sorted(found, key=lambda s: (len(s), sorted(s))):
        sg = SymmetryGroup(W, H, ())
        out.append(SymmetryGroup(W, H, sg.minimal_generators))
    return out


def enumerate_admissible_subgroups(W: InvertiblePolynomial,
                                   max_order: int = DEFAULT_MAX_ORDER) -> list[SymmetryGroup]:
    if abs(W.determinant) > max_order:
        raise GroupTooLarge(f"|G^max| = {abs(W.determinant)} exceeds {max_order}")
    return enumerate_subgroups_containing(gmax(W, max_order), [J_element(W)], max_order)


# ---------------------------------------------------------------- canonical forms

def chain_property(beta: Sequence[int], a: Sequence[int]) -> bool:
    """Leading pattern (a_1-1, 0, a_3-1, 0, ...) must break at an odd position.

    A vector that never breaks the pattern is accepted when the chain has even
    length (the pattern then covers every coordinate) and rejected otherwise.
    """
    n = len(a)
    for i in range(n):
        pos = i + 1
        target = a[i] - 1 if pos % 2 == 1 else 0
        if beta[i] != target:
            return pos % 2 == 1
    return n % 2 == 0


def atom_box(atom: AtomicSummand) -> list[tuple[int, ...]]:
    """Exponent vectors (canonical atom order) of the standard Milnor basis of the atom."""
    a = atom.exponents
    if atom.kind == FERMAT:
        return [(b,) for b in range(a[0] - 1)]
    box = list(itertools.product(*(range(x) for x in a)))
    if atom.kind == LOOP:
        return box
    return [b for b in box if chain_property(b, a)]


def atom_group_element(atom: AtomicSummand, r: Sequence[int], transpose: bool = False) -> tuple[Fraction, ...]:
    """[M^{-1}(r+1)] (or [(M^T)^{-1}(r+1)]) for the local atom matrix, reduced mod 1."""
    m = atom.local_matrix()
    if transpose:
        m = linalg.transpose(linalg.to_matrix(m))
    x = linalg.solve(linalg.to_matrix(m), [ri + 1 for ri in r])
    return tuple(_mod1(v) for v in x)


@dataclass(frozen=True)
class CanonicalForm:
    r: tuple[int, ...]
    atom: AtomicSummand
    transpose: bool = False


def canonical_forms(g: GroupElement | Sequence[Fraction], atom: AtomicSummand,
                    transpose: bool = False) -> list[CanonicalForm]:
    """All constraint-satisfying r with [M^{-1}(r+1)] equal to g on the atom.

    ``g`` may be a global element (restricted through ``atom.var_indices``) or
    a tuple already in canonical atom order.
    """
    if isinstance(g, GroupElement):
        target = tuple(g.theta[j] for j in atom.var_indices)
    else:
        target = tuple(_mod1(t) for t in g)
    return [CanonicalForm(r, atom, transpose) for r in atom_box(atom)
            if atom_group_element(atom, r, transpose) == target]


def canonical_form(g, atom: AtomicSummand, transpose: bool = False) -> CanonicalForm | list[CanonicalForm]:
    """The unique canonical form of a nonzero element; for g = 0 the list of identity forms."""
    forms = canonical_forms(g, atom, transpose)
    target = g.coords(atom.var_indices) if isinstance(g, GroupElement) else tuple(g)
    if not any(target):
        return forms
    if len(forms) != 1:
        raise NoCanonicalForm(f"{len(forms)} canonical forms for {target} on {atom.label()}")
    return forms[0]
