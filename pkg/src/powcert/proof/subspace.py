"""Evaluate both sides of the function-field subspace inequality on Q(x).

For ``phi_1..phi_N`` linearly independent over the constants and a finite
place set ``S`` containing every pole of the ``phi_i`` and every zero of
``phi_1..phi_r``, with ``sigma = sum phi_i``:

    sum_{P in S} (nu_P(sigma) - min_i nu_P(phi_i))
        <= C(N, 2) (|S| + 2g - 2) + sum_{i > r} deg(phi_i)

with genus ``g = 0``.  Places of Q(x) are weighted by their degree on both
sides, and ``deg(phi)`` is the height of ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from ..field import Place, Polynomial, RationalFunction, height, support, valuation_at_place


def _rank(rows: List[List[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = max((len(r) for r in rows), default=0)
    for r in rows:
        r.extend([Fraction(0)] * (ncols - len(r)))
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / p[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], p)]
        rank += 1
    return rank


def linearly_independent(functions: Sequence[RationalFunction]) -> bool:
    """Independence over the constants, via the rank of the cleared numerators.

    For functions with rational coefficients complex dependence implies
    rational dependence, so this is exact.
    """
    if not functions:
        return True
    functions = [RationalFunction.coerce(f) for f in functions]
    if any(f.is_zero() for f in functions):
        return False
    den = Polynomial.constant(1)
    for f in functions:
        q = f.denominator
        den = den * q.exact_div(den.gcd(q))
    rows = [list((f.numerator * den.exact_div(f.denominator)).coefficients) for f in functions]
    return _rank(rows) == len(functions)


@dataclass(frozen=True)
class SubspaceInstance:
    functions: Tuple[RationalFunction, ...]
    r: int
    places: FrozenSet[Place]

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(RationalFunction.coerce(f) for f in self.functions))
        object.__setattr__(self, "places", frozenset(self.places))
        if not 0 <= self.r <= len(self.functions):
            raise ValueError(f"r = {self.r} outside [0, {len(self.functions)}]")

    @classmethod
    def minimal(cls, functions: Iterable, r: int, extra: Iterable[Place] = ()) -> "SubspaceInstance":
        """Smallest admissible ``S`` (poles of all, zeros of the first ``r``) plus ``extra``."""
        functions = tuple(RationalFunction.coerce(f) for f in functions)
        places = set(extra)
        for i, f in enumerate(functions):
            for P, v in support(f).items():
                if v < 0 or (i < r and v > 0):
                    places.add(P)
        return cls(functions, r, frozenset(places))

    def check(self) -> None:
        """Raise ``ValueError`` naming the first violated precondition."""
        if not self.functions:
            raise ValueError("need at least one function")
        if not linearly_independent(self.functions):
            raise ValueError("precondition violated: functions are linearly dependent")
        for i, f in enumerate(self.functions):
            for P, v in support(f).items():
                if v < 0 and P not in self.places:
                    raise ValueError(f"precondition violated: S misses pole {P} of phi_{i + 1}")
                if v > 0 and i < self.r and P not in self.places:
                    raise ValueError(f"precondition violated: S misses zero {P} of phi_{i + 1}")


@dataclass(frozen=True)
class SubspaceResult:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def subspace_inequality_check(inst: SubspaceInstance) -> SubspaceResult:
    inst.check()
    phis = inst.functions
    sigma = phis[0]
    for f in phis[1:]:
        sigma = sigma + f
    lhs = 0
    for P in sorted(inst.places, key=Place.sort_key):
        low = min(valuation_at_place(f, P) for f in phis)
        lhs += P.degree * (valuation_at_place(sigma, P) - low)
    s_size = sum(P.degree for P in inst.places)
    rhs = comb(len(phis), 2) * (s_size - 2) + sum(height(f) for f in phis[inst.r :])
    return SubspaceResult(lhs, rhs)
