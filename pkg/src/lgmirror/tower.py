"""Exact scalars in Q[r_1, ..., r_k] / (r_i^{D_i} - alpha_i).

Every rescaling root gets its own power relation. Exponents are kept reduced
into [0, D_i), so two scalars are equal in the quotient iff their reduced
dictionaries agree. Equality there implies equality for every choice of
complex roots; the converse can fail, which is what ``numeric_value`` is for.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

NUMERIC_DPS = 80  # about 256 bits
NUMERIC_TOL = mpmath.mpf("1e-40")


@dataclass(frozen=True)
class Root:
    name: str
    degree: int
    value: Fraction  # r ** degree == value


@dataclass
class Tower:
    """The set of formal roots that scalars of one computation may use."""

    roots: list[Root] = field(default_factory=list)

    def add(self, name: str, degree: int, value: Fraction) -> int:
        for k, r in enumerate(self.roots):
            if r.name == name:
                assert r.degree == degree and r.value == value
                return k
        self.roots.append(Root(name, int(degree), Fraction(value)))
        return len(self.roots) - 1

    def index(self, name: str) -> int:
        for k, r in enumerate(self.roots):
            if r.name == name:
                return k
        raise KeyError(name)

    def scalar(self, c=1, powers: dict | None = None) -> "TowerScalar":
        return TowerScalar.make(self, c, powers or {})

    def zero(self) -> "TowerScalar":
        return TowerScalar(self, {})

    def one(self) -> "TowerScalar":
        return self.scalar(1)


def _reduce_monomial(tower: Tower, exps: Sequence[int]) -> tuple[Fraction, tuple[int, ...]]:
    coef = Fraction(1)
    out = []
    for k, e in enumerate(exps):
        root = tower.roots[k]
        if root.degree == 0:
            if e != 0:
                raise ValueError(f"root {root.name} has degree 0 but exponent {e}")
            out.append(0)
            continue
        q, rem = divmod(e, root.degree)
        if q:
            if root.value == 0:
                raise ZeroDivisionError(f"root {root.name} is zero")
            coef *= root.value ** q
        out.append(rem)
    return coef, tuple(out)


class TowerScalar:
    __slots__ = ("tower", "terms")

    def __init__(self, tower: Tower, terms: dict):
        self.tower = tower
        self.terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def make(cls, tower: Tower, c, powers: dict) -> "TowerScalar":
        exps = [0] * len(tower.roots)
        for name, e in powers.items():
            k = tower.index(name) if isinstance(name, str) else name
            exps[k] += e
        coef, m = _reduce_monomial(tower, exps)
        return cls(tower, {m: Fraction(c) * coef})

    def _pad(self, m: tuple[int, ...]) -> tuple[int, ...]:
        n = len(self.tower.roots)
        return m + (0,) * (n - len(m))

    def _terms(self) -> dict:
        out: dict = {}
        for m, c in self.terms.items():
            mm = self._pad(m)
            out[mm] = out.get(mm, 0) + c
        return out

    def __add__(self, other):
        if not isinstance(other, TowerScalar):
            other = self.tower.scalar(other)
        out = self._terms()
        for m, c in other._terms().items():
            out[m] = out.get(m, 0) + c
        return TowerScalar(self.tower, out)

    __radd__ = __add__

    def __neg__(self):
        return TowerScalar(self.tower, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, TowerScalar) else -Fraction(other))

    def __mul__(self, other):
        if not isinstance(other, TowerScalar):
            return TowerScalar(self.tower, {m: c * Fraction(other) for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self._terms().items():
            for m2, c2 in other._terms().items():
                coef, m = _reduce_monomial(self.tower, [a + b for a, b in zip(m1, m2)])
                out[m] = out.get(m, 0) + c1 * c2 * coef
        return TowerScalar(self.tower, out)

    __rmul__ = __mul__

    def inverse(self) -> "TowerScalar":
        """Inverse of a single-term scalar c * prod r_k^{e_k}."""
        t = self._terms()
        if len(t) != 1:
            raise ZeroDivisionError("only single-term tower scalars are inverted")
        (m, c), = t.items()
        coef, mm = _reduce_monomial(self.tower, [-e for e in m])
        return TowerScalar(self.tower, {mm: coef / c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TowerScalar):
            other = self.tower.scalar(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self._terms().items())))

    def rational(self) -> Fraction | None:
        """The value if the scalar involves no roots."""
        t = self._terms()
        if not t:
            return Fraction(0)
        if len(t) == 1:
            (m, c), = t.items()
            if not any(m):
                return c
        return None

    def numeric_value(self, dps: int = NUMERIC_DPS):
        """Complex value using principal real or complex roots."""
        with mpmath.workdps(dps):
            vals = []
            for r in self.tower.roots:
                if r.degree == 0:
                    vals.append(mpmath.mpf(1))
                else:
                    vals.append(mpmath.root(mpmath.mpf(r.value.numerator) / r.value.denominator, r.degree))
            total = mpmath.mpc(0)
            for m, c in self._terms().items():
                term = mpmath.mpf(c.numerator) / c.denominator
                for v, e in zip(vals, m):
                    term *= v ** e
                total += term
            return total

    def numerically_equal(self, other) -> bool:
        if not isinstance(other, TowerScalar):
            other = self.tower.scalar(other)
        with mpmath.workdps(NUMERIC_DPS):
            return abs((self - other).numeric_value()) < NUMERIC_TOL

    def __repr__(self):
        return f"TowerScalar({self})"

    def __str__(self):
        t = self._terms()
        if not t:
            return "0"
        parts = []
        for m, c in sorted(t.items()):
            factors = [f"{self.tower.roots[k].name}^{e}" for k, e in enumerate(m) if e]
            parts.append("*".join([str(c)] + factors) if factors else str(c))
        return " + ".join(parts)

    def to_json(self):
        r = self.rational()
        if r is not None:
            return str(r)
        return {"terms": [[str(c), {self.tower.roots[k].name: e for k, e in enumerate(m) if e}]
                          for m, c in sorted(self._terms().items())]}
