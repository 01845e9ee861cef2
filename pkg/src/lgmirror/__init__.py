"""Exact Landau-Ginzburg mirror symmetry for invertible polynomials."""
from .mirror import MirrorMap, check_property1, verify_isomorphism
from .polyform import InvertiblePolynomial, parse_polynomial, transpose, weights
from .statespace import StateSpace
from .symmetry import GroupElement, SymmetryGroup, dual_group, gmax

__all__ = ["InvertiblePolynomial", "parse_polynomial", "transpose", "weights", "GroupElement",
           "SymmetryGroup", "gmax", "dual_group", "StateSpace", "MirrorMap", "check_property1",
           "verify_isomorphism"]
