"""Built-in list of test polynomials and the groups run against them."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .mirror import check_property1
from .polyform import InvertiblePolynomial, parse_polynomial
from .symmetry import DEFAULT_MAX_ORDER, SymmetryGroup, enumerate_admissible_subgroups


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    text: str

    @property
    def poly(self) -> InvertiblePolynomial:
        return parse_polynomial(self.text)


ENTRIES = (
    CatalogEntry("x3", "fermat", "x^3"),
    CatalogEntry("x4", "fermat", "x^4"),
    CatalogEntry("x5", "fermat", "x^5"),
    CatalogEntry("x3+y3", "sum", "x^3+y^3"),
    CatalogEntry("x3+y4", "sum", "x^3+y^4"),
    CatalogEntry("x3+y3+z3", "sum", "x^3+y^3+z^3"),
    CatalogEntry("loop(2,2)", "loop", "x^2*y+y^2*x"),
    CatalogEntry("loop(2,3)", "loop", "x^2*y+y^3*x"),
    CatalogEntry("loop(3,3)", "loop", "x^3*y+y^3*x"),
    CatalogEntry("loop(2,2,2)", "loop", "x^2*y+y^2*z+z^2*x"),
    CatalogEntry("loop(2,2,2,2)", "loop", "x^2*y+y^2*z+z^2*w+w^2*x"),
    CatalogEntry("chain(2,3)", "chain", "x^2*y+y^3"),
    CatalogEntry("chain(3,2)", "chain", "x^3*y+y^2"),
    CatalogEntry("x3+loop(2,2)", "mixed", "x^3+y^2*z+z^2*y"),
    CatalogEntry("x3+chain(2,3)", "mixed", "x^3+y^2*z+z^3"),
)


def entries(only: Iterable[str] | str | None = None) -> list[CatalogEntry]:
    """Entries whose family or name matches one of ``only`` (all if empty)."""
    if isinstance(only, str):
        # commas inside names such as loop(2,2) do not separate keys
        only = [s.strip() for s in re.split(r",(?![^(]*\))", only) if s.strip()]
    keys = set(only or ())
    return [e for e in ENTRIES if not keys or e.family in keys or e.name in keys]


@dataclass
class CatalogPair:
    entry: CatalogEntry
    W: InvertiblePolynomial
    G: SymmetryGroup
    property1: bool

    @property
    def label(self) -> str:
        gens = ",".join(str(g) for g in self.G.minimal_generators) or "0"
        return f"{self.entry.name} |G|={self.G.order} <{gens}>"


def pairs(entry: CatalogEntry, max_order: int = DEFAULT_MAX_ORDER,
          keep_violations: bool = False) -> list[CatalogPair]:
    W = entry.poly
    out = []
    for G in enumerate_admissible_subgroups(W, max_order):
        ok, _ = check_property1(W, G)
        if ok or keep_violations:
            out.append(CatalogPair(entry, W, G, ok))
    return out


def all_pairs(only=None, max_order: int = DEFAULT_MAX_ORDER, keep_violations: bool = False):
    return [p for e in entries(only) for p in pairs(e, max_order, keep_violations)]
