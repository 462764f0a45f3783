"""Exact invariants of free divisors and hypersurface complements.

Computes logarithmic derivation bases and Saito-type freeness certificates,
projective multidegrees of rational maps, Segre and Chern-Schwartz-
MacPherson classes, hyperplane-arrangement characteristic polynomials, and
the monomial-curve pole-order test, all in exact arithmetic (rationals or a
64-bit prime field).
"""

from .errors import (
    CurveInsideDivisor,
    FieldMismatch,
    GenericityFailure,
    LogdivError,
    MixedDegrees,
    NonIntegralClass,
    NotFree,
    NotHomogeneous,
    NotLogarithmic,
    NotSquarefree,
    ParseError,
    Refusal,
    SaturationDiverged,
)
from .orders import GREVLEX, LEX, BlockOrder, Grevlex, Lex, MonomialOrder
from .parse import parse_poly
from .poly import MPoly, apply_coefficients, is_squarefree, mpoly_gcd

__all__ = [
    "MPoly",
    "parse_poly",
    "apply_coefficients",
    "is_squarefree",
    "mpoly_gcd",
    "MonomialOrder",
    "Grevlex",
    "Lex",
    "BlockOrder",
    "GREVLEX",
    "LEX",
    "LogdivError",
    "ParseError",
    "FieldMismatch",
    "Refusal",
    "NotHomogeneous",
    "NotSquarefree",
    "NotLogarithmic",
    "NotFree",
    "MixedDegrees",
    "GenericityFailure",
    "CurveInsideDivisor",
    "NonIntegralClass",
    "SaturationDiverged",
]
