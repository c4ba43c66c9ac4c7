"""Exact univariate polynomials over the rationals."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

from . import _intpoly

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = -math.inf


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    """Canonical ``"p/q"`` text (``"p"`` when the denominator is 1)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _lcm_denominators(coeffs: Iterable[Fraction]) -> int:
    d = 1
    for c in coeffs:
        cd = c.denominator
        if cd != 1:
            d = d * cd // math.gcd(d, cd)
    return d


class Polynomial:
    """Immutable polynomial with Fraction coefficients, ascending by degree.

    >>> x = Polynomial.x()
    >>> (x**2 - 1).gcd(x**2 - 2*x + 1)
    Polynomial(['-1', '1'])
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Iterable = ()):
        cs = [to_fraction(c) for c in coefficients]
        while cs and not cs[-1]:
            cs.pop()
        self._c: Tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Tuple[Fraction, ...]) -> "Polynomial":
        # Trusted constructor: coeffs already Fractions with no trailing zero.
        p = object.__new__(cls)
        p._c = coeffs
        p._hash = None
        return p

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls([0] * degree + [c])

    @classmethod
    def from_text(cls, items: Sequence[str]) -> "Polynomial":
        """Parse the ascending coefficient-string form, e.g. ``["1","0","1"]``."""
        if isinstance(items, (str, bytes)):
            raise TypeError("polynomial text form is a list of coefficient strings")
        return cls(to_fraction(s) for s in items)

    @classmethod
    def _from_int(cls, coeffs: Sequence[int], den: int = 1) -> "Polynomial":
        if den == 1:
            return cls._raw(tuple(Fraction(c) for c in _intpoly.strip(list(coeffs))))
        return cls._raw(tuple(Fraction(c, den) for c in _intpoly.strip(list(coeffs))))

    def _to_int(self) -> Tuple[List[int], int]:
        """``(ints, den)`` with ``self == ints / den``."""
        den = _lcm_denominators(self._c)
        if den == 1:
            return [c.numerator for c in self._c], 1
        return [c.numerator * (den // c.denominator) for c in self._c], den

    # -- basic properties ----------------------------------------------------

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    lc = leading_coefficient

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def to_text(self) -> List[str]:
        return [format_fraction(c) for c in self._c]

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                body = format_fraction(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_fraction(a)}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._c == Polynomial.constant(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def sort_key(self) -> Tuple:
        return (len(self._c), self._c)

    # -- ring operations -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return NotImplemented

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self._c))

    def __pos__(self) -> "Polynomial":
        return self

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return Polynomial._raw(())
            return Polynomial._raw(tuple(c * other for c in self._c))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return Polynomial._raw(())
        a, da = self._to_int()
        b, db = other._to_int()
        return Polynomial._from_int(_intpoly.mul(a, b), da * db)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a non-negative int")
        if n == 0:
            return Polynomial._raw((Fraction(1),))
        a, den = self._to_int()
        result = [1]
        base = a
        e = n
        while True:
            if e & 1:
                result = _intpoly.mul(result, base)
            e >>= 1
            if not e:
                break
            base = _intpoly.mul(base, base)
        return Polynomial._from_int(result, den**n)

    def __divmod__(self, other) -> Tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        if len(other._c) == 1:
            inv = 1 / other._c[0]
            return self * inv, Polynomial._raw(())
        a, da = self._to_int()
        b, db = other._to_int()
        q, r, k = _intpoly.pseudo_divmod(a, b)
        # lc(b)^k a = q b + r  =>  self = (db q / (da lc^k)) other + r / (da lc^k)
        scale = da * b[-1] ** k
        quotient = Polynomial(Fraction(c * db, scale) for c in q)
        remainder = Polynomial(Fraction(c, scale) for c in r)
        return quotient, remainder

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient, raising ``ValueError`` when the division leaves a remainder."""
        q, r = divmod(self, other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Polynomial") -> bool:
        return not (other % self)

    def monic(self) -> "Polynomial":
        if not self._c:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self._c[-1]
        if lc == 1:
            return self
        return Polynomial._raw(tuple(c / lc for c in self._c))

    def primitive_int(self) -> List[int]:
        """Primitive integer associate (positive leading coefficient)."""
        a, _ = self._to_int()
        return _intpoly.primitive(a)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd; ``gcd(0, 0)`` is the zero polynomial."""
        if not self._c and not other._c:
            return Polynomial._raw(())
        if not self._c:
            return other.monic()
        if not other._c:
            return self.monic()
        g = _intpoly.gcd_int(self._to_int()[0], other._to_int()[0])
        return Polynomial._from_int(g).monic()

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(tuple(i * c for i, c in enumerate(self._c) if i))

    def __call__(self, value):
        """Evaluate by Horner's rule at a scalar, polynomial or rational function."""
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            value = to_fraction(value)
        zero = value * 0
        if not self._c:
            return zero
        acc = zero + self._c[-1]
        for c in reversed(self._c[:-1]):
            acc = acc * value + c
        return acc

    evaluate = __call__

    def compose(self, inner: "Polynomial") -> "Polynomial":
        return self(inner)

    def reverse(self) -> "Polynomial":
        """``x**deg * self(1/x)``."""
        return Polynomial(reversed(self._c))
