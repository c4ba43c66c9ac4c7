"""Shared corpus, random generators and the acceptance summary hook."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from powcert.field import Polynomial, RationalFunction
from powcert.recurrence import PowerSumSequence

X = Polynomial.x()
ONE = Polynomial.constant(1)


def P(*coeffs):
    """Polynomial from ascending coefficients."""
    return Polynomial(coeffs)


# -- corpus -----------------------------------------------------------------

BINARY_CORPUS = {
    "binary-basic": PowerSumSequence((1, 1), (X**2, X + 1)),
    "half-half": PowerSumSequence((Fraction(1, 2), Fraction(1, 2)), (X**2 + 1, X)),
    "constant-second": PowerSumSequence((3, -1), (X**2, Polynomial.constant(2))),
    "poly-coeffs": PowerSumSequence(
        (RationalFunction(X), RationalFunction(2 * X)), (X**2, X + 1)
    ),
    "rational-coeffs": PowerSumSequence(
        (RationalFunction(ONE, X + 1), RationalFunction(P(-5), X + 1)), (X**3 - X, X**2 + 1)
    ),
}

GENERAL_CORPUS = {
    "counterexample": PowerSumSequence((1, 2, 1), (X**2, X, ONE)),
    "cubic-chain": PowerSumSequence((1, 1, 1), (X**3, X**2, X)),
    "mixed-signs": PowerSumSequence((1, -3, Fraction(2, 5)), (X**3 + X, X**2 - 1, P(7))),
    "order-four": PowerSumSequence((1, 1, 1, 1), (X**4 + 1, X**2 + X, X - 2, ONE)),
}

SEQUENCE_CORPUS = {**BINARY_CORPUS, **GENERAL_CORPUS}

# integral power sums (term() is defined for every n)
INTEGRAL_CORPUS = {k: v for k, v in SEQUENCE_CORPUS.items() if k != "rational-coeffs"}

# (h, m) pairs with deg h <= 5, m <= 4; leading coefficients positive so the
# real positive root convention recovers h exactly
POWER_CORPUS = [
    (X + 3, 2),
    (X**2 + 1, 2),
    (X**2 + 1, 3),
    (X**2 - X + Fraction(1, 2), 4),
    (P(5, -2, 0, 1), 2),
    (P(5, -2, 0, 1), 3),
    (Fraction(1, 2) * X**2 + 3, 2),
    (Fraction(1, 2) * X**2 + 3, 4),
    (P(-7, 0, 0, Fraction(1, 3), 1), 2),
    (P(-7, 0, 0, Fraction(1, 3), 1), 3),
    (X**5 - X, 2),
    (P(-1, 0, 1, 0, 0, 2), 4),
    (4 * X**3 + 9, 2),
]

ALPHA1_CORPUS = [
    X,
    X**2,
    X**3,
    X * (X + 1),
    X**2 * (X + 1),
    (X + 1) ** 2 * (X - 2) ** 3,
    X**4 * (X**2 + 1) ** 6,
    X**3 + X + 1,
    (X**2 + 1) ** 4,
    3 * (X - 1) ** 6 * (X + 5) ** 9,
    X**2 + 1,
]


# -- random generators --------------------------------------------------------

small_fraction = st.builds(
    Fraction, st.integers(-9, 9), st.integers(1, 4)
)
nonzero_fraction = small_fraction.filter(bool)


def polynomials(max_degree=8, min_degree=0):
    return st.lists(small_fraction, min_size=min_degree + 1, max_size=max_degree + 1).map(Polynomial)


def nonzero_polynomials(max_degree=8, min_degree=0):
    return polynomials(max_degree, min_degree).filter(lambda p: not p.is_zero() and p.degree >= min_degree)


def rational_functions(max_degree=8):
    return st.builds(RationalFunction, nonzero_polynomials(max_degree), nonzero_polynomials(max_degree))


def random_polynomial(rng: random.Random, degree: int, bound: int = 9, monic: bool = False) -> Polynomial:
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(degree)]
    lead = Fraction(1) if monic else Fraction(rng.choice([-1, 1]) * rng.randint(1, bound), rng.randint(1, 3))
    return Polynomial(coeffs + [lead])


def random_rational_function(rng: random.Random, max_degree: int) -> RationalFunction:
    num = random_polynomial(rng, rng.randint(0, max_degree))
    den = random_polynomial(rng, rng.randint(0, max_degree))
    return RationalFunction(num, den)


@pytest.fixture
def rng():
    return random.Random(20240601)


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        prev = _ACCEPTANCE.get(name)
        if prev != "FAIL":
            _ACCEPTANCE[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        number = int(name[len("test_ac"):].split("_")[0])
        label = name.split("_", 2)[2].replace("_", " ")
        terminalreporter.write_line(f"AC{number:<2} {_ACCEPTANCE[name]}  {label}")
