"""Explicit index bounds, the exponent threshold and the proof's degree bookkeeping."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from ..errors import HypothesisViolation
from ..field import Polynomial, height, valuation_at_infinity
from ..power_detect import squarefree_decompose
from ..recurrence import THEOREM1, THEOREM2, PowerSumSequence, validate
from ..search import Catalogue, search_powers

# Both proofs fix the free parameter J to 1 before stating the bound.
J_FIXED = 1


@dataclass(frozen=True)
class BoundReport:
    theorem: int
    index_bound: int
    exponent_threshold: Optional[int] = None
    inputs: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.index_bound < 0:
            raise ValueError("index bound must be non-negative")
        if (self.exponent_threshold is not None) != (self.theorem == 2):
            raise ValueError("exponent threshold is reported for theorem 2 only")

    def to_text(self) -> dict:
        return {
            "theorem": self.theorem,
            "index_bound": self.index_bound,
            "exponent_threshold": self.exponent_threshold,
            "inputs": self.inputs,
        }


def binary_bound(seq: PowerSumSequence) -> BoundReport:
    """``C = (2+deg a1)(3+deg a1)(1+deg a1+deg a2+2H(a_1)) + |nu_inf(a_1)|`` for binary sequences.

    Here ``deg a1, deg a2`` abbreviate the degrees of the two roots.
    """
    validate(seq, THEOREM1).raise_for_violations()
    d1, d2 = seq.root_degrees
    a1 = seq.coefficients[0]
    h_a1 = height(a1)
    v_a1 = valuation_at_infinity(a1)
    c = (2 + d1) * (3 + d1) * (1 + d1 + d2 + 2 * h_a1) + abs(v_a1)
    inputs = {"J": J_FIXED, "deg_alpha": [d1, d2], "height_a1": h_a1, "nu_inf_a1": v_a1}
    return BoundReport(1, c, None, inputs)


def general_index_bound(seq: PowerSumSequence) -> int:
    """``C = d(d+1) * sum(deg alpha_j)`` for order ``d >= 3``."""
    validate(seq, THEOREM2).raise_for_violations()
    d = seq.order
    return d * (d + 1) * sum(seq.root_degrees)


def general_bound(seq: PowerSumSequence, catalogue: Optional[Catalogue] = None, workers: int = 1) -> BoundReport:
    """Index bound and exponent threshold for order ``d >= 3``.

    ``catalogue`` is a sweep over ``[0, C]`` if the caller already has one;
    otherwise the sweep runs here.
    """
    c = general_index_bound(seq)
    threshold = exponent_threshold(seq, catalogue, workers=workers)
    d = seq.order
    inputs = {"J": J_FIXED, "L_max": d, "d": d, "deg_alpha": list(seq.root_degrees)}
    return BoundReport(2, c, threshold, inputs)


def _threshold_from(seq: PowerSumSequence, catalogue: Catalogue) -> int:
    top = max((w.exponent for _, w in catalogue), default=0)
    return max(seq.root_degrees[0], top)


def exponent_threshold(seq: PowerSumSequence, catalogue: Optional[Catalogue] = None, workers: int = 1) -> int:
    """``M*`` such that no ``G_n`` is an ``m``-th power (``deg h >= 2``) for any ``m > M*``.

    Theorem 2's argument bounds ``n`` for every ``m > deg alpha_1``, so the
    largest exponent seen below the index bound, floored at ``deg alpha_1``,
    is effective.  ``catalogue`` may be a precomputed sweep over ``[0, C]``.
    """
    c = general_index_bound(seq)
    if catalogue is None:
        catalogue = search_powers(seq, 0, c, workers=workers)
    return _threshold_from(seq, catalogue)


def compute_m0(alpha1: Polynomial, m: int) -> int:
    """Least ``m0 >= 1`` with ``alpha1**(m0/m)`` a rational function over C.

    Constants always have complex ``m``-th roots, so only the squarefree
    multiplicities ``e_i`` matter: ``m0 = lcm_i m / gcd(m, e_i)``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if alpha1.is_constant():
        raise ValueError("compute_m0 needs a non-constant polynomial")
    m0 = 1
    for _, e in squarefree_decompose(alpha1).parts:
        k = m // math.gcd(m, e)
        m0 = m0 * k // math.gcd(m0, k)
    return m0


def genus_and_S_bounds(
    seq: PowerSumSequence, m: int, m0: Optional[int] = None, m1: Optional[int] = None
) -> Dict[str, object]:
    """Upper bounds for ``2g - 2`` of the Kummer extensions and for ``|S|``.

    ``m0`` defaults to :func:`compute_m0`.  ``m1`` (the Kummer degree for
    ``a_1**(1/m)`` over ``Q(x, alpha_1**(1/m))``) cannot be computed here and
    must be supplied for binary sequences.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    degs = seq.root_degrees
    if m0 is None:
        m0 = compute_m0(seq.roots[0], m)
    report: Dict[str, object] = {"m": m, "m0": m0, "two_g_F_minus_2_max": m0 * (degs[0] - 1)}
    if seq.order == 2:
        if m1 is None:
            raise ValueError("m1 must be supplied for the binary case")
        h_a1 = height(seq.coefficients[0])
        report.update(
            case="binary",
            m1=m1,
            height_a1=h_a1,
            two_g_Fprime_minus_2_max=m1 * m0 * (degs[0] + 2 * h_a1),
            S_size_max=m1 * m0 * (1 + degs[0] + degs[1] + 2 * h_a1),
        )
    else:
        report.update(case="general", S_size_max=m0 * (1 + sum(degs)))
    return report


@dataclass(frozen=True)
class DependentCaseVerdict:
    """Degree comparisons that rule out a linear relation among the leading terms."""

    leading_lhs_degree: int
    leading_rhs_degree_max: int
    final_lhs_degree: int
    final_rhs_degree: int
    general_numerator_degree_max: Optional[Fraction] = None
    general_denominator_degree: Optional[int] = None

    @property
    def leading_holds(self) -> bool:
        return self.leading_lhs_degree > self.leading_rhs_degree_max

    @property
    def final_holds(self) -> bool:
        return self.final_lhs_degree < self.final_rhs_degree

    @property
    def general_holds(self) -> Optional[bool]:
        if self.general_numerator_degree_max is None:
            return None
        return self.general_numerator_degree_max < self.general_denominator_degree

    @property
    def holds(self) -> bool:
        return self.leading_holds and self.final_holds and self.general_holds is not False


def dependent_case_checks(seq: PowerSumSequence, n: int, m: int, L: int) -> DependentCaseVerdict:
    """Evaluate the strict degree inequalities behind the dependent case.

    With ``beta_i = alpha_i**n``: the top monomial ``beta_1^(1+m(L-1))`` beats
    everything on the other side, and ``n deg alpha_2 < n deg alpha_1``.  For
    order ``d >= 3`` and ``m > deg alpha_1`` also
    ``(n/m) deg alpha_1 + n deg alpha_2 < n deg alpha_1``.
    """
    degs = seq.root_degrees
    if not degs[0] > degs[1]:
        raise HypothesisViolation(
            "dependent case needs a dominant root",
            [f"dominant root: deg alpha_1 = {degs[0]} is not > deg alpha_2 = {degs[1]}"],
        )
    if n < 1 or m < 2 or L < 1:
        raise ValueError("need n >= 1, m >= 2, L >= 1")
    b1, b2 = n * degs[0], n * degs[1]
    general_num = general_den = None
    if seq.order >= 3 and m > degs[0]:
        general_num = Fraction(n, m) * degs[0] + b2
        general_den = b1
    return DependentCaseVerdict(
        leading_lhs_degree=(1 + m * (L - 1)) * b1,
        leading_rhs_degree_max=m * (L - 1) * b1 + b2,
        final_lhs_degree=b2,
        final_rhs_degree=b1,
        general_numerator_degree_max=general_num,
        general_denominator_degree=general_den,
    )
