"""Places of the rational function field, valuations and the projective height.

A finite place is a monic irreducible polynomial over the rationals; its
degree weights the place so that statements over the complex numbers (where
every place has degree one) hold verbatim after weighting: the ``deg P``
conjugate points of a finite place all share one valuation value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .poly import Polynomial
from .ratfunc import RationalFunction

#: Default degree above which :func:`support` refuses to factor.
FACTOR_DEGREE_CAP = 12


class FactorizationIncomplete(RuntimeError):
    """Raised when a polynomial is too large for :func:`support` to factor."""


@dataclass(frozen=True)
class Place:
    kind: str  # "finite" | "infinite"
    generator: Optional[Polynomial] = None

    def __post_init__(self):
        if self.kind == "infinite":
            if self.generator is not None:
                raise ValueError("the infinite place has no generator")
        elif self.kind == "finite":
            g = self.generator
            if g is None or g.is_constant() or not g.is_monic():
                raise ValueError("finite place needs a monic non-constant generator")
        else:
            raise ValueError(f"unknown place kind {self.kind!r}")

    @classmethod
    def infinity(cls) -> "Place":
        return cls("infinite")

    @classmethod
    def at(cls, generator: Polynomial, check: bool = True) -> "Place":
        """The finite place of ``generator``, made monic and checked irreducible."""
        g = generator.monic()
        if check and not is_irreducible(g):
            raise ValueError(f"{g} is reducible over the rationals")
        return cls("finite", g)

    @property
    def degree(self) -> int:
        return 1 if self.generator is None else self.generator.degree

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def sort_key(self) -> Tuple:
        if self.generator is None:
            return (1, ())
        return (0, self.generator.sort_key())

    def __str__(self) -> str:
        return "∞" if self.generator is None else f"({self.generator})"

    def to_text(self):
        return "inf" if self.generator is None else self.generator.to_text()


def _nonzero(f: RationalFunction) -> RationalFunction:
    f = RationalFunction.coerce(f)
    if f.is_zero():
        raise ValueError("valuation of zero undefined (∞)")
    return f


def _multiplicity(p: Polynomial, g: Polynomial) -> int:
    k = 0
    while p.degree >= g.degree:
        q, r = divmod(p, g)
        if r:
            break
        p = q
        k += 1
    return k


def valuation_at_infinity(f) -> int:
    f = _nonzero(f)
    return f.denominator.degree - f.numerator.degree


def valuation_at_place(f, place: Place) -> int:
    """Order of ``f`` at ``place``: multiplicity in the numerator minus the denominator."""
    f = _nonzero(f)
    if place.is_infinite:
        return valuation_at_infinity(f)
    g = place.generator
    return _multiplicity(f.numerator, g) - _multiplicity(f.denominator, g)


def height(f) -> int:
    """Projective height of a nonzero rational function, ``max(deg p, deg q)``."""
    f = RationalFunction.coerce(f)
    if f.is_zero():
        raise ValueError("height of zero is infinite")
    return max(f.numerator.degree, f.denominator.degree)


# ---------------------------------------------------------------------------
# factorization (sympy backed)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _factor_cached(coeffs: Tuple[Fraction, ...]) -> Tuple[Tuple[Polynomial, int], ...]:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for fac, mult in factors:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        out.append((Polynomial(cs).monic(), int(mult)))
    out.sort(key=lambda item: (item[0].sort_key(), item[1]))
    return tuple(out)


def factor(p: Polynomial, max_degree: Optional[int] = FACTOR_DEGREE_CAP) -> List[Tuple[Polynomial, int]]:
    """Monic irreducible factors of ``p`` over the rationals with multiplicities.

    Only the squarefree part is handed to the factorizer, so ``max_degree``
    caps ``deg(p / gcd(p, p'))`` rather than ``deg p``.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.is_constant():
        return []
    radical = p.exact_div(p.gcd(p.derivative()))
    if max_degree is not None and radical.degree > max_degree:
        raise FactorizationIncomplete(
            f"factorization incomplete: squarefree part of degree {radical.degree} exceeds cap {max_degree}"
        )
    if radical.degree == p.degree:
        return list(_factor_cached(p.coefficients))
    return [(g, _multiplicity(p, g)) for g, _ in _factor_cached(radical.coefficients)]


def is_irreducible(p: Polynomial) -> bool:
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    fs = factor(p, max_degree=None)
    return len(fs) == 1 and fs[0][1] == 1


def support(f, max_degree: Optional[int] = FACTOR_DEGREE_CAP) -> Dict[Place, int]:
    """All places where ``f`` has nonzero valuation, infinity included."""
    f = _nonzero(f)
    out: Dict[Place, int] = {}
    for g, k in factor(f.numerator, max_degree):
        out[Place("finite", g)] = k
    for g, k in factor(f.denominator, max_degree):
        out[Place("finite", g)] = -k
    v = valuation_at_infinity(f)
    if v:
        out[Place.infinity()] = v
    return dict(sorted(out.items(), key=lambda item: item[0].sort_key()))


def zeros(f, max_degree: Optional[int] = FACTOR_DEGREE_CAP) -> List[Place]:
    return [P for P, v in support(f, max_degree).items() if v > 0]


def poles(f, max_degree: Optional[int] = FACTOR_DEGREE_CAP) -> List[Place]:
    return [P for P, v in support(f, max_degree).items() if v < 0]
