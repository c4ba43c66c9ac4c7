"""Binomial and multinomial expansions of ``G_n**(1/m)`` at infinity.

Writing ``G_n = a_1 alpha_1^n (1 + sum_j (a_j/a_1)(alpha_j/alpha_1)^n)``, the
root expands as a sum of terms

    t_h = b_h * a_1^(1/m) * alpha_1^(n/m) * prod_j (alpha_j/alpha_1)^(n h_j)

indexed by ``h = (h_2, ..., h_d)``.  The root of unity is normalised to 1.
Valuations at infinity of these terms are exact rationals because
``alpha_1^(n/m)`` usually lives in an extension of Q(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

from ..field import Polynomial, RationalFunction, valuation_at_infinity
from ..power_detect import monic_mth_root, root_series_coefficients
from ..recurrence import THEOREM1, THEOREM2, PowerSumSequence, validate


def generalized_binomial(alpha: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (alpha - i) / (i + 1)
    return out


def multinomial_series_coefficient(m: int, index: Sequence[int]) -> Fraction:
    """Coefficient of ``prod y_j^(h_j)`` in ``(1 + y_2 + ... + y_d)**(1/m)``."""
    if any(h < 0 for h in index):
        raise ValueError("multi-index entries must be non-negative")
    k = sum(index)
    multinomial = math.factorial(k)
    for h in index:
        multinomial //= math.factorial(h)
    return generalized_binomial(Fraction(1, m), k) * multinomial


def integer_root(a: int, m: int) -> Optional[int]:
    """Exact integer ``m``-th root of ``a`` (negative only for odd ``m``)."""
    if a < 0:
        if m % 2 == 0:
            return None
        r = integer_root(-a, m)
        return None if r is None else -r
    if a < 2:
        return a
    r = 1 << -(-a.bit_length() // m)
    # Newton from above converges monotonically to floor(a**(1/m)).
    while True:
        s = ((m - 1) * r + a // r ** (m - 1)) // m
        if s >= r:
            break
        r = s
    return r if r**m == a else None


def fraction_root(q: Fraction, m: int) -> Optional[Fraction]:
    """Rational ``m``-th root (the positive one for even ``m``), if it exists."""
    num = integer_root(q.numerator, m)
    den = integer_root(q.denominator, m)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def polynomial_root(p: Polynomial, m: int) -> Optional[Polynomial]:
    if p.is_constant():
        r = fraction_root(p[0], m)
        return None if r is None else Polynomial.constant(r)
    h = monic_mth_root(p, m)
    if h is None:
        return None
    r = fraction_root(p.leading_coefficient, m)
    return None if r is None else h * r


def rational_function_root(f: RationalFunction, m: int) -> Optional[RationalFunction]:
    """An ``m``-th root of ``f`` inside Q(x), or ``None``."""
    f = RationalFunction.coerce(f)
    num = polynomial_root(f.numerator, m)
    den = polynomial_root(f.denominator, m)
    if num is None or den is None:
        return None
    return RationalFunction(num, den)


@dataclass(frozen=True)
class ExpansionTerm:
    index: Tuple[int, ...]
    scalar: Fraction
    infinity_valuation: Fraction
    exact_value: Optional[RationalFunction] = None


def _check_eligible(seq: PowerSumSequence) -> None:
    target = THEOREM1 if seq.order == 2 else THEOREM2
    validate(seq, target).raise_for_violations()


def term_infinity_valuation(seq: PowerSumSequence, n: int, m: int, index: Sequence[int]) -> Fraction:
    """``(1/m) nu(a_1) + n(-deg alpha_1/m + sum_j h_j (deg alpha_1 - deg alpha_j))``."""
    degs = seq.root_degrees
    v_a1 = valuation_at_infinity(seq.coefficients[0])
    shift = sum(h * (degs[0] - dj) for h, dj in zip(index, degs[1:]))
    return Fraction(v_a1, m) + n * (Fraction(-degs[0], m) + shift)


def expansion_term(
    seq: PowerSumSequence, n: int, m: int, index: Sequence[int], with_value: bool = True
) -> ExpansionTerm:
    """The term ``t_h`` of the root expansion of ``G_n`` (root of unity = 1).

    ``scalar`` is ``b_h = g_h * prod (a_j/a_1)^(h_j)``; the factor
    ``a_1^(1/m)`` is kept out of it so the scalar stays rational.
    ``exact_value`` is filled in when ``a_1`` and ``alpha_1^n`` both have
    ``m``-th roots in Q(x).
    """
    _check_eligible(seq)
    index = tuple(int(h) for h in index)
    if len(index) != seq.order - 1:
        raise ValueError(f"index needs {seq.order - 1} entries, got {len(index)}")
    if n < 0 or m < 2:
        raise ValueError("need n >= 0 and m >= 2")
    a = seq.coefficients
    b = multinomial_series_coefficient(m, index)
    for h, aj in zip(index, a[1:]):
        b *= (aj / a[0]).constant_value() ** h
    valuation = term_infinity_valuation(seq, n, m, index)
    value = None
    if with_value:
        r_a1 = rational_function_root(a[0], m)
        r_alpha = polynomial_root(seq.roots[0] ** n, m) if r_a1 is not None else None
        if r_a1 is not None and r_alpha is not None:
            value = r_a1 * r_alpha * b
            alpha1 = RationalFunction.coerce(seq.roots[0])
            for h, alpha_j in zip(index, seq.roots[1:]):
                if h:
                    value = value * (RationalFunction.coerce(alpha_j) / alpha1) ** (n * h)
    return ExpansionTerm(index, b, valuation, value)


# ---------------------------------------------------------------------------
# descending expansions at infinity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootSeries:
    """Leading nonzero terms ``coeff * x**exponent`` of ``f**(1/m)`` at infinity.

    ``tail_valuation`` is the valuation at infinity of everything after the
    listed terms (``math.inf`` when the tail vanishes).
    """

    terms: Tuple[Tuple[int, Fraction], ...]
    terminates: bool
    tail_valuation: Union[int, float]

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def partial_sum(self) -> RationalFunction:
        out = RationalFunction.coerce(0)
        x = RationalFunction.x()
        for e, c in self.terms:
            out = out + c * x**e
        return out

    def as_polynomial(self) -> Polynomial:
        if not self.terminates or any(e < 0 for e, _ in self.terms):
            raise ValueError("series is not a polynomial")
        coeffs = [Fraction(0)] * (max((e for e, _ in self.terms), default=0) + 1)
        for e, c in self.terms:
            coeffs[e] = c
        return Polynomial(coeffs)


def truncated_root_series(f: Polynomial, m: int, K: int) -> RootSeries:
    """First ``K`` nonzero terms of ``f**(1/m)`` in descending powers of ``x``.

    Needs ``m | deg f`` and a rational ``m``-th root of the leading
    coefficient (the positive root is used for even ``m``).
    """
    if m < 2 or K < 1:
        raise ValueError("need m >= 2 and K >= 1")
    if f.is_zero():
        raise ValueError("root series of the zero polynomial")
    if f.degree % m:
        raise ValueError(f"{m} does not divide deg f = {f.degree}")
    lc_root = fraction_root(f.leading_coefficient, m)
    if lc_root is None:
        raise ValueError(f"leading coefficient {f.leading_coefficient} is not an {m}-th power in Q")
    k = f.degree // m
    rev = f.monic().reverse()
    coeffs = root_series_coefficients(rev, m)
    head = [next(coeffs) for _ in range(k + 1)]
    terminates = Polynomial(head) ** m == rev
    terms = []
    j = 0
    tail: Union[int, float] = math.inf
    while True:
        if j < len(head):
            c = head[j]
        elif terminates:
            break
        else:
            c = next(coeffs)
        if c:
            if len(terms) == K:
                tail = j - k
                break
            terms.append((k - j, c * lc_root))
        j += 1
    return RootSeries(tuple(terms), terminates, tail)


def laurent_at_infinity(f, lowest_exponent: int) -> Dict[int, Fraction]:
    """Coefficients of ``x**e`` for ``e >= lowest_exponent`` in the expansion at infinity."""
    f = RationalFunction.coerce(f)
    if f.is_zero():
        return {}
    num, den = f.numerator, f.denominator
    top = num.degree - den.degree
    if lowest_exponent > top:
        return {}
    # f = x^top * rev(num)(1/x) / rev(den)(1/x); rev(den) has constant term 1.
    p, q = num.reverse(), den.reverse()
    count = top - lowest_exponent + 1
    out = []
    for j in range(count):
        s = p[j]
        for i in range(1, min(j, q.degree) + 1):
            s -= q[i] * out[j - i]
        out.append(s)
    return {top - j: c for j, c in enumerate(out) if c}
