"""Small exact linear algebra over the rationals.

Matrices are lists of lists of ``Fraction``. Everything here is dense and
meant for the tiny systems that show up in Milnor-ring computations.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def rref(a: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (reduced rows, pivot columns).

    Only the first ``ncols`` columns are used for pivoting; trailing columns
    are carried along (augmented systems).
    """
    m = [list(row) for row in a]
    if not m:
        return m, []
    width = len(m[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(row) for row in a]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [vi - f * vc for vi, vc in zip(m[i], m[c])]
    return d


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(map(Fraction, row)) + identity(n)[i] for i, row in enumerate(a)]
    red, piv = rref(aug, ncols=n)
    if piv != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def solve(a: Matrix, b: Sequence) -> list[Fraction]:
    """Solve a square non-singular system ``a x = b``."""
    n = len(a)
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, piv = rref(aug, ncols=n)
    if piv != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n] for row in red]
