"""Exhaustive checks of the loop and chain identities the homomorphism proof leans on.

Each check works on one atom rebuilt in canonical variable order and returns
a ``LemmaResult`` listing every counterexample it found.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .milnor import monomials_up_to, ring
from .oracle import oracle_srAn
from .polyform import CHAIN, FERMAT, LOOP, AtomicSummand, InvertiblePolynomial, build, transpose, weights
from .symmetry import atom_box


@dataclass
class LemmaResult:
    name: str
    atom: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        return {"name": self.name, "atom": self.atom, "checked": self.checked,
                "passed": self.ok, "failures": [str(f) for f in self.failures[:20]],
                "notes": {k: str(v) for k, v in self.notes.items()}}


def canonical(atom: AtomicSummand) -> InvertiblePolynomial:
    return build(atom.kind, atom.exponents)


def _integral(x: Sequence[Fraction]) -> bool:
    return all(Fraction(v).denominator == 1 for v in x)


def _transpose_solve(W: InvertiblePolynomial, v: Sequence[int]) -> list[Fraction]:
    return linalg.solve(linalg.transpose(W.matrix()), list(v))


def _is_hessian_multiple(R, nf: dict) -> bool:
    return bool(nf) and set(nf) == {R.top_monomial}


def minus_J(atom: AtomicSummand) -> LemmaResult:
    """[M^{-1} h_{W^T}] = -J."""
    W = canonical(atom)
    res = LemmaResult("minus_J", atom.label(), checked=1)
    hT = weights(transpose(W)).h
    lhs = [x % 1 for x in linalg.solve(W.matrix(), list(hT))]
    rhs = [(-x) % 1 for x in weights(W).q]
    if lhs != rhs:
        res.failures.append((lhs, rhs))
    return res


def hessian_exponents(atom: AtomicSummand) -> LemmaResult:
    """Every top-degree monomial equal to a nonzero multiple of the Hessian has t + 2 in M^T Z^N."""
    W = canonical(atom)
    R = ring(W)
    res = LemmaResult("hessian_exponents", atom.label())
    zero = 0
    for t in monomials_up_to(R.q, R.top_degree):
        if R.degree(t) != R.top_degree:
            continue
        nf = R.normal_form(t)
        if not nf:
            zero += 1
            continue
        res.checked += 1
        if not _is_hessian_multiple(R, nf):
            res.failures.append(("not top", t, nf))
        elif not _integral(_transpose_solve(W, [x + 2 for x in t])):
            res.failures.append(("nonintegral", t))
    res.notes["zero_monomials"] = zero
    return res


def even_loop_powers(atom: AtomicSummand) -> LemmaResult:
    """For an even loop, prod_{odd} X^{2a-2} and prod_{even} X^{2a-2} are explicit multiples of X^{a-1}."""
    res = LemmaResult("even_loop_powers", atom.label())
    if atom.kind != LOOP or atom.size % 2:
        res.notes["skipped"] = "not an even loop"
        return res
    W = canonical(atom)
    R = ring(W)
    a = atom.exponents
    top = tuple(x - 1 for x in a)
    for parity in (1, 0):  # 1-based odd positions first
        mono = tuple(2 * a[i] - 2 if (i + 1) % 2 == parity else 0 for i in range(len(a)))
        coef = Fraction(1)
        for i in range(len(a)):
            if (i + 1) % 2 != parity:
                coef *= -a[i]
        res.checked += 1
        got = R.normal_form(mono)
        want = R.normal_form(top)
        want = {m: c * coef for m, c in want.items()}
        if got != want:
            res.failures.append((mono, got, want))
    return res


def integer_solutions(atom: AtomicSummand) -> LemmaResult:
    """Solutions of 2 <= M^T n <= 2a fall in the listed cases; odd loops only in the first."""
    res = LemmaResult("integer_solutions", atom.label())
    if atom.kind == FERMAT:
        res.notes["skipped"] = "stated for loops and chains only"
        return res
    out = oracle_srAn(atom)
    res.checked = len(out["solutions"])
    res.failures.extend(out["unclassified"])
    if atom.kind == LOOP and atom.size % 2:
        for n, v, names in out["solutions"]:
            if names != ["a"]:
                res.failures.append(("odd loop outside case a", n, v))
    res.notes["cases"] = sorted({c for _, _, names in out["solutions"] for c in names})
    return res


def _chain_sum_forms(a: Sequence[int]) -> dict:
    N = len(a)
    out = {}
    for s in range(1, N + 2):
        v = []
        for i in range(1, N + 1):
            if i < s:
                v.append((2 * a[i - 1] - 2) if i % 2 else 0)
            elif i == s:
                v.append(a[i - 1] - (2 if i % 2 else 0))
            else:
                v.append(a[i - 1] - 1)
        out[s] = tuple(v)
    return out


def one_of_three(atom: AtomicSummand) -> LemmaResult:
    """Box pairs r, s with r + s + 2 in M^T Z^N fall in one of the listed shapes."""
    W = canonical(atom)
    R = ring(W)
    a = atom.exponents
    N = len(a)
    hm1 = R.top_monomial
    res = LemmaResult("one_of_three", atom.label())
    if atom.kind == LOOP:
        box = list(itertools.product(*(range(x) for x in a)))
    else:
        box = atom_box(atom)
    odd = tuple((a[i] - 1) if (i + 1) % 2 else 0 for i in range(N))
    even = tuple(0 if (i + 1) % 2 else (a[i] - 1) for i in range(N))
    chain_forms = _chain_sum_forms(a) if atom.kind == CHAIN else {}
    seen = set()
    for r in box:
        for s in box:
            v = [x + y + 2 for x, y in zip(r, s)]
            if not _integral(_transpose_solve(W, v)):
                continue
            res.checked += 1
            rs = tuple(x + y for x, y in zip(r, s))
            if rs == hm1:
                seen.add("h-1")
                continue
            if atom.kind == LOOP:
                if r == s == odd:
                    seen.add("odd")
                    continue
                if r == s == even:
                    seen.add("even")
                    continue
            elif atom.kind == CHAIN:
                hit = [k for k, f in chain_forms.items() if f == rs]
                if hit:
                    seen.add(f"s={hit[0]}")
                    continue
            res.failures.append((r, s))
    res.notes["shapes"] = sorted(seen)
    return res


def hessian_criterion(atom: AtomicSummand) -> LemmaResult:
    """For canonical r, s: r + s + 2 in M^T Z^N iff X^{r+s} is a nonzero multiple of the Hessian."""
    W = canonical(atom)
    R = ring(W)
    res = LemmaResult("hessian_criterion", atom.label())
    box = atom_box(atom)
    for r in box:
        for s in box:
            rs = tuple(x + y for x, y in zip(r, s))
            lhs = _integral(_transpose_solve(W, [x + 2 for x in rs]))
            rhs = _is_hessian_multiple(R, R.normal_form(rs))
            res.checked += 1
            if lhs != rhs:
                res.failures.append((r, s, lhs, rhs))
    return res


CHECKS = (minus_J, hessian_exponents, even_loop_powers, integer_solutions, one_of_three,
          hessian_criterion)


def run_all(atom: AtomicSummand) -> list[LemmaResult]:
    return [check(atom) for check in CHECKS]
