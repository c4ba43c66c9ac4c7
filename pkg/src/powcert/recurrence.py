"""Polynomial power sums ``G_n = a_1 alpha_1^n + ... + a_d alpha_d^n``.

Sequences are stored in power-sum form with polynomial roots ``alpha_i`` and
rational-function coefficients ``a_i``.  Roots are kept sorted by decreasing
degree (ties by coefficient tuple) so that ``alpha_1`` is the dominant root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, List, Sequence, Tuple

from .errors import HypothesisViolation, PowerSumNotIntegral
from .field import Polynomial, RationalFunction

THEOREM1 = "theorem1"
THEOREM2 = "theorem2"

TAG_SIMPLE = "simple"
TAG_NONDEGENERATE = "non-degenerate"
TAG_THEOREM1 = "theorem1-eligible"
TAG_THEOREM2 = "theorem2-eligible"


@dataclass(frozen=True)
class PowerSumSequence:
    coefficients: Tuple[RationalFunction, ...]
    roots: Tuple[Polynomial, ...]

    def __post_init__(self):
        coeffs = tuple(RationalFunction.coerce(a) for a in self.coefficients)
        roots = tuple(r if isinstance(r, Polynomial) else Polynomial.constant(r) for r in self.roots)
        if not roots:
            raise ValueError("a power sum needs at least one root")
        if len(coeffs) != len(roots):
            raise ValueError(f"{len(coeffs)} coefficients for {len(roots)} roots")
        if len(roots) < 2:
            raise ValueError("power sums of order d < 2 are not supported")
        for i, (a, r) in enumerate(zip(coeffs, roots)):
            if r.is_zero():
                raise ValueError(f"root {i + 1} is zero")
            if a.is_zero():
                raise ValueError(f"coefficient {i + 1} is zero")
        pairs = sorted(zip(roots, coeffs), key=lambda rc: (-rc[0].degree, rc[0].coefficients))
        object.__setattr__(self, "roots", tuple(r for r, _ in pairs))
        object.__setattr__(self, "coefficients", tuple(a for _, a in pairs))

    @classmethod
    def from_text(cls, data: dict) -> "PowerSumSequence":
        return cls(
            tuple(RationalFunction.from_text(a) for a in data["coefficients"]),
            tuple(Polynomial.from_text(r) for r in data["roots"]),
        )

    def to_text(self) -> dict:
        return {
            "coefficients": [a.to_text() for a in self.coefficients],
            "roots": [r.to_text() for r in self.roots],
        }

    @property
    def order(self) -> int:
        return len(self.roots)

    @property
    def root_degrees(self) -> Tuple[int, ...]:
        return tuple(r.degree for r in self.roots)

    @cached_property
    def profile(self) -> FrozenSet[str]:
        """Hypothesis tags granted by the validators that pass."""
        tags = set()
        for target in (THEOREM1, THEOREM2):
            tags |= validate(self, target).tags
        return frozenset(tags)

    def __str__(self) -> str:
        terms = [f"({a})*({r})^n" for a, r in zip(self.coefficients, self.roots)]
        return " + ".join(terms)


@dataclass(frozen=True)
class RecurrenceForm:
    """``G_{n+d} = A_{d-1} G_{n+d-1} + ... + A_0 G_n`` with initial terms."""

    coefficients: Tuple[Polynomial, ...]
    initial_terms: Tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.initial_terms):
            raise ValueError("recurrence needs as many initial terms as coefficients")
        if not self.coefficients:
            raise ValueError("empty recurrence")

    @property
    def order(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class ValidationResult:
    target: str
    tags: FrozenSet[str] = field(default_factory=frozenset)
    violations: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def raise_for_violations(self) -> None:
        if self.violations:
            raise HypothesisViolation(f"sequence not {self.target}-eligible", self.violations)


def term(seq: PowerSumSequence, n: int) -> Polynomial:
    """The polynomial ``G_n``; raises :class:`PowerSumNotIntegral` otherwise."""
    if n < 0:
        raise ValueError("index n must be non-negative")
    if all(a.is_polynomial() for a in seq.coefficients):
        total = Polynomial()
        for a, r in zip(seq.coefficients, seq.roots):
            total = total + a.numerator * r**n
        return total
    total = RationalFunction.coerce(0)
    for a, r in zip(seq.coefficients, seq.roots):
        total = total + a * r**n
    if not total.is_polynomial():
        raise PowerSumNotIntegral(f"power sum not integral at n={n}: {total}")
    return total.numerator


def _coincident_roots(seq: PowerSumSequence) -> List[Tuple[int, int]]:
    out = []
    for i in range(seq.order):
        for j in range(i + 1, seq.order):
            if seq.roots[i] == seq.roots[j]:
                out.append((i, j))
    return out


def to_recurrence_form(seq: PowerSumSequence) -> RecurrenceForm:
    """Expand the characteristic polynomial ``prod (T - alpha_i)``."""
    clash = _coincident_roots(seq)
    if clash:
        i, j = clash[0]
        raise HypothesisViolation(
            "recurrence form needs a simple sequence", [f"simple: roots {i + 1} and {j + 1} coincide"]
        )
    # char[k] is the coefficient of T^k.
    char = [Polynomial.constant(1)]
    for alpha in seq.roots:
        nxt = [Polynomial() for _ in range(len(char) + 1)]
        for k, c in enumerate(char):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - alpha * c
        char = nxt
    A = tuple(-c for c in char[:-1])
    initial = tuple(term(seq, n) for n in range(seq.order))
    return RecurrenceForm(A, initial)


def term_by_recurrence(form: RecurrenceForm, n: int) -> Polynomial:
    if n < 0:
        raise ValueError("index n must be non-negative")
    d = form.order
    if n < d:
        return form.initial_terms[n]
    window = list(form.initial_terms)
    for _ in range(n - d + 1):
        nxt = Polynomial()
        for a, g in zip(form.coefficients, window):
            nxt = nxt + a * g
        window = window[1:] + [nxt]
    return window[-1]


def _proportional(p: Polynomial, q: Polynomial) -> bool:
    if p.degree != q.degree:
        return False
    return p * q.leading_coefficient == q * p.leading_coefficient


def validate(seq: PowerSumSequence, target) -> ValidationResult:
    """Check the hypotheses of theorem 1 (binary) or theorem 2 (order >= 3).

    Checks run in a fixed order: simplicity, non-degeneracy, then the
    theorem-specific conditions.  Violations are returned, never raised.
    """
    target = {1: THEOREM1, 2: THEOREM2, "1": THEOREM1, "2": THEOREM2}.get(target, target)
    if target not in (THEOREM1, THEOREM2):
        raise ValueError(f"unknown validation target {target!r}")
    tags = set()
    violations: List[str] = []
    d = seq.order

    clash = _coincident_roots(seq)
    for i, j in clash:
        violations.append(f"simple: roots {i + 1} and {j + 1} coincide")
    if not clash:
        tags.add(TAG_SIMPLE)

    degenerate = False
    for i in range(d):
        for j in range(i + 1, d):
            if _proportional(seq.roots[i], seq.roots[j]):
                ratio = seq.roots[i].leading_coefficient / seq.roots[j].leading_coefficient
                violations.append(f"non-degenerate: alpha_{i + 1}/alpha_{j + 1} = {ratio} is constant")
                degenerate = True
    if not degenerate:
        tags.add(TAG_NONDEGENERATE)

    degs = seq.root_degrees
    a = seq.coefficients
    if target == THEOREM1:
        if d != 2:
            violations.append(f"order: theorem 1 needs d = 2, got d = {d}")
        else:
            ratio = a[1] / a[0]
            if not ratio.is_constant():
                violations.append(f"coefficient ratio: a_2/a_1 = {ratio} is not constant")
            if not degs[0] > degs[1]:
                violations.append(f"dominant root: deg alpha_1 = {degs[0]} is not > deg alpha_2 = {degs[1]}")
    else:
        if d < 3:
            violations.append(f"order: theorem 2 needs d >= 3, got d = {d}")
        for i, ai in enumerate(a):
            if not ai.is_constant():
                violations.append(f"constant coefficients: a_{i + 1} = {ai} is not constant")
        if d >= 3:
            if not degs[0] > degs[1]:
                violations.append(f"degree chain: deg alpha_1 = {degs[0]} is not > deg alpha_2 = {degs[1]}")
            if not degs[1] > degs[2]:
                violations.append(f"degree chain: deg alpha_2 = {degs[1]} is not > deg alpha_3 = {degs[2]}")
            # weak decrease below alpha_3 holds by the stored sort order

    if not violations:
        tags.add(TAG_THEOREM1 if target == THEOREM1 else TAG_THEOREM2)
    return ValidationResult(target, frozenset(tags), tuple(violations))


def require(seq: PowerSumSequence, target) -> None:
    validate(seq, target).raise_for_violations()
