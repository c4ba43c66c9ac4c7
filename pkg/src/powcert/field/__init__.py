"""Exact arithmetic in Q[x] and Q(x): polynomials, rational functions, places."""

from .places import (
    FACTOR_DEGREE_CAP,
    FactorizationIncomplete,
    Place,
    factor,
    height,
    is_irreducible,
    poles,
    support,
    valuation_at_infinity,
    valuation_at_place,
    zeros,
)
from .poly import NEG_INF, Polynomial, format_fraction, to_fraction
from .ratfunc import RationalFunction, compose

__all__ = [
    "FACTOR_DEGREE_CAP",
    "FactorizationIncomplete",
    "NEG_INF",
    "Place",
    "Polynomial",
    "RationalFunction",
    "compose",
    "factor",
    "format_fraction",
    "height",
    "is_irreducible",
    "poles",
    "support",
    "to_fraction",
    "valuation_at_infinity",
    "valuation_at_place",
    "zeros",
]
