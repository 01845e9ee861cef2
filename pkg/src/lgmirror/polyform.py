"""Invertible quasi-homogeneous polynomials: parsing, classification, weights, transpose."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .errors import ExponentTooSmall, NotInvertibleShape, ParseError

FERMAT, LOOP, CHAIN = "fermat", "loop", "chain"


@dataclass(frozen=True)
class AtomicSummand:
    """One atomic piece, with variables listed in the canonical atom order.

    For a loop this is X_1^{a_1}X_2 + ... + X_k^{a_k}X_1, for a chain
    X_1^{a_1}X_2 + ... + X_k^{a_k}; ``var_indices[i]`` is the parent index of X_{i+1}.
    """

    kind: str
    exponents: tuple[int, ...]
    var_indices: tuple[int, ...]

    def __post_init__(self):
        if self.kind == FERMAT and len(self.exponents) != 1:
            raise NotInvertibleShape("a Fermat atom has exactly one variable")
        if self.kind in (LOOP, CHAIN) and len(self.exponents) < 2:
            raise NotInvertibleShape(f"a {self.kind} atom needs at least two variables")
        if len(self.exponents) != len(self.var_indices):
            raise NotInvertibleShape("exponent and index lists differ in length")

    @property
    def size(self) -> int:
        return len(self.exponents)

    def local_matrix(self) -> list[list[int]]:
        """Exponent matrix in the canonical atom order."""
        k = self.size
        m = [[0] * k for _ in range(k)]
        for i, a in enumerate(self.exponents):
            m[i][i] = a
            if self.kind == LOOP:
                m[i][(i + 1) % k] = 1
            elif self.kind == CHAIN and i + 1 < k:
                m[i][i + 1] = 1
        return m

    def label(self) -> str:
        return f"{self.kind}{tuple(self.exponents) if self.size > 1 else self.exponents[0]}"


@dataclass(frozen=True)
class WeightSystem:
    q: tuple[Fraction, ...]
    w: tuple[int, ...]
    d: int
    central_charge: Fraction
    h: tuple[int, ...]


@dataclass(frozen=True)
class InvertiblePolynomial:
    """W = sum_i prod_j X_j^{M_ij} with unit coefficients.

    Rows are stored so that row i is the monomial whose large exponent sits on
    X_i; in particular ``M[i][i] = a_i``.
    """

    exponent_matrix: tuple[tuple[int, ...], ...]
    variable_names: tuple[str, ...]
    atoms: tuple[AtomicSummand, ...] = field(compare=False, repr=False)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        rows = [tuple(int(v) for v in r) for r in matrix]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise NotInvertibleShape("exponent matrix must be square")
        if names is None:
            names = default_names(n)
        if len(names) != n:
            raise NotInvertibleShape("number of variable names does not match the matrix")
        atoms = classify(rows)
        main = {}
        for idx, r in enumerate(rows):
            main[_main_variable(r)] = r
        ordered = tuple(main[i] for i in range(n))
        if linalg.det(linalg.to_matrix(ordered)) == 0:
            raise NotInvertibleShape("exponent matrix is singular")
        return cls(ordered, tuple(names), tuple(atoms))

    @property
    def n_vars(self) -> int:
        return len(self.exponent_matrix)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(self.exponent_matrix[i][i] for i in range(self.n_vars))

    def matrix(self) -> linalg.Matrix:
        return linalg.to_matrix(self.exponent_matrix)

    @cached_property
    def inverse_matrix(self) -> linalg.Matrix:
        return linalg.inverse(self.matrix())

    @cached_property
    def determinant(self) -> int:
        return int(linalg.det(self.matrix()))

    def atom_of(self, index: int) -> AtomicSummand:
        for atom in self.atoms:
            if index in atom.var_indices:
                return atom
        raise IndexError(index)

    def restrict_rows(self, indices) -> list[int]:
        """Rows (monomials) all of whose variables lie in ``indices``."""
        s = set(indices)
        return [i for i, r in enumerate(self.exponent_matrix)
                if all(j in s for j, e in enumerate(r) if e)]

    def __str__(self) -> str:
        return format_polynomial(self)


def default_names(n: int) -> tuple[str, ...]:
    if n <= 4:
        return tuple("xyzw"[:n])
    return tuple(f"x{i + 1}" for i in range(n))


def _main_variable(row: Sequence[int]) -> int:
    nz = [(j, e) for j, e in enumerate(row) if e]
    if not nz or len(nz) > 2:
        raise NotInvertibleShape(f"monomial {tuple(row)} must involve one or two variables")
    big = [j for j, e in nz if e >= 2]
    if len(nz) == 1:
        if nz[0][1] < 2:
            raise ExponentTooSmall(f"monomial {tuple(row)} has exponent < 2")
        return nz[0][0]
    if len(big) == 0:
        raise ExponentTooSmall(f"monomial {tuple(row)} has no exponent >= 2")
    if len(big) == 2 or any(e != 1 for j, e in nz if j not in big):
        raise NotInvertibleShape(f"monomial {tuple(row)} is not of atomic shape")
    return big[0]


def classify(matrix: Sequence[Sequence[int]]) -> list[AtomicSummand]:
    """Decompose an exponent matrix into Fermat, loop and chain atoms.

    Rows may come in any order. Atoms are returned sorted by their smallest
    variable index.
    """
    rows = [tuple(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotInvertibleShape("exponent matrix must be square")
    link: dict[int, int | None] = {}
    expo: dict[int, int] = {}
    for r in rows:
        v = _main_variable(r)
        if v in link:
            raise NotInvertibleShape(f"variable {v} carries the large exponent in two monomials")
        others = [j for j, e in enumerate(r) if e and j != v]
        link[v] = others[0] if others else None
        expo[v] = r[v]
    if len(link) != n:
        raise NotInvertibleShape("some variable is never the leading variable of a monomial")
    incoming: dict[int, int] = {}
    for v, t in link.items():
        if t is not None:
            if t in incoming:
                raise NotInvertibleShape(f"variable {t} is linked from two monomials")
            incoming[t] = v

    atoms = []
    seen: set[int] = set()
    # chains and Fermats start at variables nobody links to
    for v in sorted(link):
        if v in incoming:
            continue
        path = [v]
        while link[path[-1]] is not None:
            path.append(link[path[-1]])
        seen.update(path)
        if len(path) == 1:
            atoms.append(AtomicSummand(FERMAT, (expo[v],), (v,)))
        else:
            atoms.append(AtomicSummand(CHAIN, tuple(expo[u] for u in path), tuple(path)))
    for v in sorted(link):
        if v in seen:
            continue
        cyc = [v]
        while link[cyc[-1]] != v:
            cyc.append(link[cyc[-1]])
        seen.update(cyc)
        atoms.append(AtomicSummand(LOOP, tuple(expo[u] for u in cyc), tuple(cyc)))
    atoms.sort(key=lambda a: min(a.var_indices))
    return atoms


def weights(W: InvertiblePolynomial) -> WeightSystem:
    q = tuple(linalg.solve(W.matrix(), [1] * W.n_vars))
    d = math.lcm(*(x.denominator for x in q))
    w = tuple(int(x * d) for x in q)
    c_hat = sum((1 - 2 * x for x in q), Fraction(0))
    col = [sum(W.exponent_matrix[i][j] for i in range(W.n_vars)) for j in range(W.n_vars)]
    h = tuple(c - 1 for c in col)
    return WeightSystem(q, w, d, c_hat, h)


def transpose(W: InvertiblePolynomial) -> InvertiblePolynomial:
    mt = [[W.exponent_matrix[j][i] for j in range(W.n_vars)] for i in range(W.n_vars)]
    return InvertiblePolynomial.from_matrix(mt, W.variable_names)


def build(kind: str, exponents: Sequence[int], names: Sequence[str] | None = None) -> InvertiblePolynomial:
    """Atomic polynomial of the given kind with variables in canonical order."""
    atom = AtomicSummand(kind, tuple(exponents), tuple(range(len(exponents))))
    return InvertiblePolynomial.from_matrix(atom.local_matrix(), names)


def direct_sum(*polys: InvertiblePolynomial) -> InvertiblePolynomial:
    n = sum(p.n_vars for p in polys)
    m = [[0] * n for _ in range(n)]
    names: list[str] = []
    off = 0
    for p in polys:
        for i, row in enumerate(p.exponent_matrix):
            for j, e in enumerate(row):
                m[off + i][off + j] = e
        names.extend(p.variable_names)
        off += p.n_vars
    if len(set(names)) != len(names):
        names = list(default_names(n))
    return InvertiblePolynomial.from_matrix(m, names)


# ---------------------------------------------------------------- text format

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<num>\d+)|(?P<op>[\^*+\[\],;=]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    return out


def parse_polynomial(text: str) -> InvertiblePolynomial:
    """Parse ``x^2*y + y^3``-style input, optionally prefixed by ``vars = [x, y];``."""
    toks = _tokenize(text)
    i = 0
    declared: list[str] | None = None
    if len(toks) >= 2 and toks[0][1] == "vars" and toks[1][1] == "=":
        i = 2
        if i >= len(toks) or toks[i][1] != "[":
            raise ParseError("expected '[' after 'vars ='", toks[i - 1][2])
        i += 1
        declared = []
        while i < len(toks) and toks[i][1] != "]":
            kind, val, pos = toks[i]
            if kind != "ident":
                raise ParseError(f"expected variable name, got {val!r}", pos)
            if val in declared:
                raise ParseError(f"variable {val!r} declared twice", pos)
            declared.append(val)
            i += 1
            if i < len(toks) and toks[i][1] == ",":
                i += 1
        if i >= len(toks):
            raise ParseError("unterminated variable list", len(text))
        i += 1
        if i < len(toks) and toks[i][1] == ";":
            i += 1

    terms: list[dict[str, int]] = []
    order: list[str] = list(declared) if declared is not None else []
    expect_factor = True
    current: dict[str, int] = {}
    term_start = toks[i][2] if i < len(toks) else len(text)
    starts = []
    if i >= len(toks):
        raise ParseError("empty polynomial", len(text))
    while i < len(toks):
        kind, val, pos = toks[i]
        if expect_factor:
            if kind == "num":
                if int(val) != 1:
                    raise ParseError("coefficients must be 1", pos)
                i += 1
                if i < len(toks) and toks[i][1] == "*":
                    i += 1
                    continue
                expect_factor = False
                continue
            if kind != "ident":
                raise ParseError(f"expected a variable, got {val!r}", pos)
            if declared is not None and val not in declared:
                raise ParseError(f"undeclared variable {val!r}", pos)
            if val not in order:
                order.append(val)
            e = 1
            i += 1
            if i < len(toks) and toks[i][1] == "^":
                if i + 1 >= len(toks) or toks[i + 1][0] != "num":
                    raise ParseError("expected an exponent after '^'", toks[i][2])
                e = int(toks[i + 1][1])
                i += 2
            if e == 0:
                raise ParseError("zero exponent", pos)
            current[val] = current.get(val, 0) + e
            expect_factor = False
        else:
            if val == "*":
                expect_factor = True
                i += 1
            elif val == "+":
                terms.append(current)
                starts.append(term_start)
                current = {}
                expect_factor = True
                i += 1
                term_start = toks[i][2] if i < len(toks) else len(text)
            else:
                raise ParseError(f"unexpected token {val!r}", pos)
    if expect_factor:
        raise ParseError("polynomial ends with an operator", len(text))
    terms.append(current)
    starts.append(term_start)
    if not all(terms):
        raise ParseError("constant term", starts[0])

    keys = [tuple(sorted(t.items())) for t in terms]
    for k, key in enumerate(keys):
        if key in keys[:k]:
            raise ParseError("repeated monomial", starts[k])
    n = len(order)
    if len(terms) != n:
        raise ParseError(f"{len(terms)} monomials for {n} variables; an invertible polynomial needs as many of each")
    idx = {v: j for j, v in enumerate(order)}
    rows = [[0] * n for _ in range(n)]
    for r, t in enumerate(terms):
        for v, e in t.items():
            rows[r][idx[v]] = e
    return InvertiblePolynomial.from_matrix(rows, order)


def format_polynomial(W: InvertiblePolynomial, with_header: bool | None = None) -> str:
    names = W.variable_names
    pieces = []
    seen: list[str] = []
    for atom in W.atoms:
        for i in atom.var_indices:
            row = W.exponent_matrix[i]
            fac = [f"{names[i]}^{row[i]}"]
            seen.append(names[i])
            for j, e in enumerate(row):
                if e and j != i:
                    fac.append(names[j] if e == 1 else f"{names[j]}^{e}")
                    seen.append(names[j])
            pieces.append("*".join(fac))
    body = " + ".join(pieces)
    first = list(dict.fromkeys(seen))
    if with_header is None:
        with_header = first != list(names)
    if with_header:
        return f"vars = [{', '.join(names)}]; {body}"
    return body
