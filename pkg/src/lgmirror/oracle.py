"""Naive, independent reimplementations used to certify the engine.

Everything here goes through sympy (dense matrices, Groebner bases, Laplace
determinants) or plain enumeration, so none of it shares code paths with the
graded row reduction in ``milnor`` or the closure logic in ``symmetry``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy

from .errors import DegreeBoundExceeded, OracleMismatch
from .polyform import CHAIN, FERMAT, LOOP, AtomicSummand, InvertiblePolynomial

MAX_VARS = 6
MAX_MONOMIALS = 4000


def _symbols(n: int):
    return sympy.symbols(f"X0:{n}")


def sympy_poly(W: InvertiblePolynomial):
    X = _symbols(W.n_vars)
    expr = sum(sympy.Mul(*(x ** e for x, e in zip(X, row))) for row in W.exponent_matrix)
    return X, expr


def _weights(W: InvertiblePolynomial) -> list[sympy.Rational]:
    M = sympy.Matrix(W.exponent_matrix)
    q = M.LUsolve(sympy.ones(W.n_vars, 1))
    return [sympy.Rational(x) for x in q]


def _monomials_of_degree(q, deg) -> list[tuple[int, ...]]:
    bounds = [int(deg / x) for x in q]
    out = []
    for e in itertools.product(*(range(b + 1) for b in bounds)):
        if sum(x * y for x, y in zip(q, e)) == deg:
            out.append(e)
            if len(out) > MAX_MONOMIALS:
                raise DegreeBoundExceeded(f"more than {MAX_MONOMIALS} monomials in degree {deg}")
    return out


@dataclass
class DenseQuotient:
    """Q[X]/Jac(W) one weighted degree at a time, by dense rank."""

    W: InvertiblePolynomial

    def __post_init__(self):
        if self.W.n_vars > MAX_VARS:
            raise DegreeBoundExceeded(f"oracle limited to {MAX_VARS} variables")
        self.X, self.expr = sympy_poly(self.W)
        self.q = _weights(self.W)
        self.c_hat = sum(1 - 2 * x for x in self.q)
        self.partials = [sympy.Poly(sympy.diff(self.expr, x), *self.X) for x in self.X]
        d = sympy.lcm([sympy.Integer(x.q) for x in self.q])
        self.step = sympy.Rational(1, d)

    def degrees(self, upto) -> list:
        out, k = [], 0
        while k * self.step <= upto:
            out.append(k * self.step)
            k += 1
        return out

    def relation_rank(self, deg) -> tuple[int, int]:
        """(number of monomials, rank of the Jacobian ideal) in one weighted degree."""
        mons = _monomials_of_degree(self.q, deg)
        if not mons:
            return 0, 0
        col = {m: k for k, m in enumerate(mons)}
        rows = []
        for i, p in enumerate(self.partials):
            dm = deg - (1 - self.q[i])
            if dm < 0:
                continue
            for m in _monomials_of_degree(self.q, dm):
                row = [0] * len(mons)
                for e, c in p.terms():
                    row[col[tuple(a + b for a, b in zip(e, m))]] += c
                rows.append(row)
        if not rows:
            return len(mons), 0
        return len(mons), sympy.Matrix(rows).rank()

    def dimension(self) -> int:
        total = 0
        for deg in self.degrees(self.c_hat):
            n, r = self.relation_rank(deg)
            total += n - r
        # a finite quotient has nothing just above the top degree
        for deg in self.degrees(self.c_hat + sympy.Rational(1, 2)):
            if deg > self.c_hat:
                n, r = self.relation_rank(deg)
                if n != r:
                    raise OracleMismatch(f"quotient of {self.W} is nonzero in degree {deg}")
        return total


@lru_cache(maxsize=None)
def oracle_quotient_dim(W: InvertiblePolynomial) -> int:
    return DenseQuotient(W).dimension()


@lru_cache(maxsize=None)
def _groebner(W: InvertiblePolynomial):
    X, expr = sympy_poly(W)
    G = sympy.groebner([sympy.diff(expr, x) for x in X], *X, order="grevlex")
    return X, G


def _expr(X, p: dict):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*(x ** e for x, e in zip(X, m)))
               for m, c in p.items()) if p else sympy.Integer(0)


def in_jacobian_ideal(W: InvertiblePolynomial, p: dict) -> bool:
    X, G = _groebner(W)
    _, rem = G.reduce(sympy.expand(_expr(X, p)))
    return sympy.expand(rem) == 0


def check_normal_forms(W: InvertiblePolynomial, monomials: Iterable[Sequence[int]], normal_form) -> list:
    """Monomials whose engine normal form differs from them by something outside Jac(W)."""
    bad = []
    for m in monomials:
        diff = {tuple(m): Fraction(1)}
        for k, c in normal_form(m).items():
            diff[k] = diff.get(k, 0) - c
        if not in_jacobian_ideal(W, {k: v for k, v in diff.items() if v}):
            bad.append(tuple(m))
    return bad


def oracle_hessian(W: InvertiblePolynomial):
    if W.n_vars > MAX_VARS:
        raise DegreeBoundExceeded(f"oracle limited to {MAX_VARS} variables")
    X, expr = sympy_poly(W)
    H = sympy.hessian(expr, X)
    return sympy.expand(H.det(method="laplace"))


def hessian_matches(W: InvertiblePolynomial, engine_hessian: dict) -> bool:
    """The unreduced sympy Hessian and the engine's reduced one agree modulo Jac(W)."""
    X, G = _groebner(W)
    _, rem = G.reduce(sympy.expand(oracle_hessian(W) - _expr(X, engine_hessian)))
    return sympy.expand(rem) == 0


def oracle_group_closure(gens: Iterable[Sequence], n: int) -> set[tuple[Fraction, ...]]:
    zero = tuple(Fraction(0) for _ in range(n))
    gens = [tuple(Fraction(x) % 1 for x in g) for g in gens]
    seen = {zero}
    queue = deque([zero])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple((a + b) % 1 for a, b in zip(x, g))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def oracle_gmax(W: InvertiblePolynomial) -> set[tuple[Fraction, ...]]:
    """Every diagonal symmetry with denominators dividing |det M|, by brute force."""
    n = W.n_vars
    d = abs(int(sympy.Matrix(W.exponent_matrix).det()))
    out = set()
    for k in itertools.product(range(d), repeat=n):
        # g = k/d, so each row condition is an integer congruence mod d
        if all(sum(e * t for e, t in zip(row, k)) % d == 0 for row in W.exponent_matrix):
            out.add(tuple(Fraction(x, d) for x in k))
    return out


# ---------------------------------------------------------------- integer solutions

def _delta_odd(i: int) -> int:
    return 1 if i % 2 == 1 else 0


def srAn_cases(atom: AtomicSummand) -> dict[str, tuple[int, ...]]:
    """The candidate vectors v, keyed by case name (positions 1-based in the formulas)."""
    a = atom.exponents
    N = len(a)
    M = atom.local_matrix()
    h = [sum(M[i][j] for i in range(N)) - 1 for j in range(N)]
    cases = {}
    if atom.kind == FERMAT:
        cases["a"] = (h[0] + 1,)
    elif atom.kind == LOOP:
        cases["a"] = tuple(x + 1 for x in h)
        cases["b"] = tuple(_delta_odd(i + 1) * (2 * a[i] - 2) + 2 for i in range(N))
        cases["c"] = tuple((1 - _delta_odd(i + 1)) * (2 * a[i] - 2) + 2 for i in range(N))
    else:
        for s in range(1, N + 2):
            v = []
            for i in range(1, N + 1):
                if i < s:
                    v.append(_delta_odd(i) * (2 * a[i - 1] - 2) + 2)
                elif i == s:
                    v.append(a[i - 1] + 2 * (1 - _delta_odd(i)))
                else:
                    v.append(1 + a[i - 1])
            cases[f"s={s}"] = tuple(v)
    return cases


def oracle_srAn(atom: AtomicSummand) -> dict:
    """Enumerate n with 2 <= (M^T n)_i <= 2 a_i and classify each solution.

    Returns {"solutions": [(n, v, [case names])], "unclassified": [...]}.
    """
    a = atom.exponents
    N = len(a)
    M = atom.local_matrix()
    bound = 2 * max(a)
    cases = srAn_cases(atom)
    sols, bad = [], []
    for n in itertools.product(range(-bound, bound + 1), repeat=N):
        v = tuple(sum(M[i][j] * n[i] for i in range(N)) for j in range(N))
        if all(2 <= v[j] <= 2 * a[j] for j in range(N)):
            names = [k for k, c in cases.items() if c == v]
            if atom.kind == CHAIN:
                first_one = next((i + 1 for i in range(N) if n[i] == 1), N + 1)
                names = [k for k in names if k == f"s={first_one}"]
            sols.append((n, v, names))
            if not names:
                bad.append((n, v))
    return {"solutions": sols, "unclassified": bad}
