"""Rational functions over the rationals in lowest terms."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple, Union

from .poly import Polynomial, format_fraction, to_fraction


class RationalFunction:
    """``numerator / denominator`` with coprime parts and a monic denominator.

    Canonical form makes equality coefficient-wise and hashing sound.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator, denominator=None):
        num = _as_poly(numerator)
        den = Polynomial.constant(1) if denominator is None else _as_poly(denominator)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self._num, self._den = num, Polynomial.constant(1)
            return
        if not den.is_constant():
            g = num.gcd(den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading_coefficient
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self._num, self._den = num, den

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        r = object.__new__(cls)
        r._num, r._den = num, den
        return r

    @classmethod
    def coerce(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls._raw(value, Polynomial.constant(1))
        return cls._raw(Polynomial.constant(to_fraction(value)), Polynomial.constant(1))

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls.coerce(Polynomial.x())

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.is_constant()

    def is_constant(self) -> bool:
        return self._den.is_constant() and self._num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._num[0]

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self._num

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"RationalFunction({self._num.to_text()!r})"
        return f"RationalFunction({self._num.to_text()!r}, {self._den.to_text()!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self._num)
        return f"({self._num})/({self._den})"

    def to_text(self) -> Union[str, list, Dict[str, list]]:
        """Constants as ``"p/q"``, polynomials as coefficient lists, else a dict."""
        if self.is_constant():
            return format_fraction(self._num[0])
        if self.is_polynomial():
            return self._num.to_text()
        return {"numerator": self._num.to_text(), "denominator": self._den.to_text()}

    @classmethod
    def from_text(cls, item) -> "RationalFunction":
        if isinstance(item, str):
            return cls.coerce(to_fraction(item))
        if isinstance(item, (list, tuple)):
            return cls.coerce(Polynomial.from_text(item))
        if isinstance(item, dict):
            if set(item) != {"numerator", "denominator"}:
                raise ValueError("rational function object needs exactly 'numerator' and 'denominator'")
            return cls(Polynomial.from_text(item["numerator"]), Polynomial.from_text(item["denominator"]))
        raise TypeError(f"cannot read a rational function from {item!r}")

    # -- field operations ----------------------------------------------------

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self._num, self._den)

    def __add__(self, other) -> "RationalFunction":
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den == other._den:
            return RationalFunction(self._num + other._num, self._den)
        return RationalFunction(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_polynomial() and other.is_polynomial():
            return RationalFunction.coerce(self._num * other._num)
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self._den, self._num)

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if not isinstance(n, int):
            raise TypeError("integer exponents only")
        if n < 0:
            return self.inverse() ** (-n)
        # Coprime parts stay coprime under powers.
        return RationalFunction._raw(self._num**n, self._den**n)

    def __call__(self, value):
        return self._num(value) / self._den(value)

    def evaluate(self, value: Fraction) -> Fraction:
        den = self._den(to_fraction(value))
        if not den:
            raise ZeroDivisionError(f"pole at {value}")
        return self._num(to_fraction(value)) / den

    def derivative(self) -> "RationalFunction":
        n, d = self._num, self._den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def reduce(self) -> "RationalFunction":
        return RationalFunction(self._num, self._den)

    def parts(self) -> Tuple[Polynomial, Polynomial]:
        return self._num, self._den


def _as_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(to_fraction(value))


def compose(outer: Polynomial, inner: RationalFunction) -> RationalFunction:
    """``outer(inner)`` for a polynomial outer map."""
    return RationalFunction.coerce(outer(RationalFunction.coerce(inner)))
