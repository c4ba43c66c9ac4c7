"""Exact detection of perfect powers ``f = lc * h^m`` in Q[x].

Two independent routes are combined.  Yun's squarefree decomposition gives
the multiplicities of ``f``; their gcd ``E`` bounds the admissible exponents.
For each candidate ``m`` the monic root is then rebuilt by coefficient
matching and confirmed by exact multiplication.

Rationality of the root: if ``f`` has rational coefficients and
``f = c * h^m`` over C, the monic ``h`` has rational coefficients, because
its coefficients solve a triangular system with rational entries.  So the
search over Q is complete over C; complex roots are ``lam * h`` with
``lam**m == lc(f)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator, List, Optional, Tuple

from .errors import InvariantFailure
from .field import Polynomial, format_fraction


@dataclass(frozen=True)
class SquarefreeDecomposition:
    content: Fraction
    parts: Tuple[Tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.content)
        for f, i in self.parts:
            out = out * f**i
        return out

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(i for _, i in self.parts)


@dataclass(frozen=True)
class PowerWitness:
    """Certified identity ``leading_coefficient * monic_root**exponent == f``."""

    exponent: int
    monic_root: Polynomial
    leading_coefficient: Fraction

    def __post_init__(self):
        if self.exponent < 2:
            raise ValueError("witness exponent must be >= 2")
        if self.monic_root.degree < 2 or not self.monic_root.is_monic():
            raise ValueError("witness root must be monic of degree >= 2")

    def expand(self) -> Polynomial:
        return self.monic_root**self.exponent * self.leading_coefficient

    def verifies(self, f: Polynomial) -> bool:
        return self.expand() == f

    def to_text(self) -> dict:
        return {
            "exponent": self.exponent,
            "leading_coefficient": format_fraction(self.leading_coefficient),
            "monic_root": self.monic_root.to_text(),
        }

    @classmethod
    def from_text(cls, data: dict) -> "PowerWitness":
        return cls(
            int(data["exponent"]),
            Polynomial.from_text(data["monic_root"]),
            Fraction(data["leading_coefficient"]),
        )


def squarefree_decompose(f: Polynomial) -> SquarefreeDecomposition:
    """Yun's algorithm; parts are monic, squarefree, coprime, by increasing multiplicity."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    lc = f.leading_coefficient
    if f.is_constant():
        return SquarefreeDecomposition(lc, ())
    g = f.monic()
    dg = g.derivative()
    a = g.gcd(dg)
    b = g.exact_div(a)
    c = dg.exact_div(a)
    d = c - b.derivative()
    parts = []
    i = 1
    while not b.is_constant():
        a = b.gcd(d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if not a.is_constant():
            parts.append((a, i))
        i += 1
    return SquarefreeDecomposition(lc, tuple(parts))


def max_power_exponent(f: Polynomial) -> int:
    """gcd of the squarefree multiplicities of a non-constant ``f``."""
    if f.is_constant():
        raise ValueError("max_power_exponent needs a non-constant polynomial")
    e = 0
    for _, i in squarefree_decompose(f).parts:
        e = math.gcd(e, i)
    return e


def root_series_coefficients(p: Polynomial, m: int) -> Iterator[Fraction]:
    """Coefficients of ``p(y)**(1/m)`` at ``y = 0`` where ``p(0) == 1``, lazily.

    J.C.P. Miller's recurrence for powers of a power series:
    ``j * h_j = sum_{i=1..j} ((1/m + 1) * i - j) * p_i * h_{j-i}``.
    """
    if p[0] != 1:
        raise ValueError("series root needs constant term 1")
    alpha1 = Fraction(1, m) + 1
    pc = p.coefficients
    h = [Fraction(1)]
    yield h[0]
    j = 1
    while True:
        s = Fraction(0)
        for i in range(1, min(j, len(pc) - 1) + 1):
            if pc[i]:
                s += (alpha1 * i - j) * pc[i] * h[j - i]
        h.append(s / j)
        yield h[j]
        j += 1


def monic_mth_root(f: Polynomial, m: int) -> Optional[Polynomial]:
    """The monic ``h`` with ``h**m == f / lc(f)``, or ``None`` if there is none.

    The top ``deg f / m + 1`` coefficients of ``f`` determine ``h`` (matching
    from the leading term down); the candidate is then checked exactly.
    """
    if m < 2:
        raise ValueError("exponent m must be >= 2")
    if f.is_constant():
        raise ValueError("monic_mth_root needs a non-constant polynomial")
    n = f.degree
    if n % m:
        return None
    k = n // m
    # Reversal turns matching from the top into a power series at y = 0.
    rev = f.monic().reverse()
    h = Polynomial(reversed(list(islice(root_series_coefficients(rev, m), k + 1))))
    if h.degree != k or not h.is_monic():
        return None
    if h**m != f.monic():
        return None
    return h


def find_all_powers(f: Polynomial) -> List[PowerWitness]:
    """All witnesses ``f = lc * h^m`` with ``m >= 2`` and ``deg h >= 2``, by ascending ``m``."""
    if f.is_constant():
        raise ValueError("find_all_powers needs a non-constant polynomial")
    e = max_power_exponent(f)
    lc = f.leading_coefficient
    out = []
    for m in range(2, e + 1):
        if e % m or f.degree < 2 * m:
            continue
        h = monic_mth_root(f, m)
        if h is None:
            continue
        w = PowerWitness(m, h, lc)
        if not w.verifies(f):
            raise InvariantFailure(f"witness m={m} failed re-verification")
        out.append(w)
    return out


def coefficient_matching_exponents(f: Polynomial) -> List[int]:
    """Exponents found by trying every ``m`` with coefficient matching alone (no Yun)."""
    if f.is_constant():
        raise ValueError("needs a non-constant polynomial")
    return [m for m in range(2, f.degree // 2 + 1) if monic_mth_root(f, m) is not None]
