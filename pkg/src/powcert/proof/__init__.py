"""Explicit quantities from the finiteness proofs: bounds, expansions, Kummer data."""

from .bounds import (
    J_FIXED,
    BoundReport,
    DependentCaseVerdict,
    binary_bound,
    compute_m0,
    dependent_case_checks,
    exponent_threshold,
    general_bound,
    general_index_bound,
    genus_and_S_bounds,
)
from .expansion import (
    ExpansionTerm,
    RootSeries,
    expansion_term,
    fraction_root,
    generalized_binomial,
    integer_root,
    laurent_at_infinity,
    multinomial_series_coefficient,
    rational_function_root,
    term_infinity_valuation,
    truncated_root_series,
)
from .kummer import KummerData, KummerEntry, kummer_genus, kummer_ramification
from .subspace import (
    SubspaceInstance,
    SubspaceResult,
    linearly_independent,
    subspace_inequality_check,
)

__all__ = [
    "J_FIXED",
    "BoundReport",
    "DependentCaseVerdict",
    "ExpansionTerm",
    "KummerData",
    "KummerEntry",
    "RootSeries",
    "SubspaceInstance",
    "SubspaceResult",
    "binary_bound",
    "compute_m0",
    "dependent_case_checks",
    "expansion_term",
    "exponent_threshold",
    "fraction_root",
    "general_bound",
    "general_index_bound",
    "generalized_binomial",
    "genus_and_S_bounds",
    "integer_root",
    "kummer_genus",
    "kummer_ramification",
    "laurent_at_infinity",
    "linearly_independent",
    "multinomial_series_coefficient",
    "rational_function_root",
    "subspace_inequality_check",
    "term_infinity_valuation",
    "truncated_root_series",
]
