import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import settings

from quartic_certify.core.forms import MonicQuartic

X, Y = sp.symbols("x y")

# sympy and mpmath calls have a slow first run
settings.register_profile("quartic", deadline=None)
settings.register_profile("quartic-full", deadline=None, max_examples=1000)
settings.load_profile("quartic")

# (plain coefficients e4..e0, expected pencil coefficients, expected verdict)
WORKED_EXAMPLES = {
    1: ((1, 0, 0, 1, 1), (Fraction(-1, 4), Fraction(1), Fraction(0)), "positive-definite"),
    2: ((1, -8, 26, -40, 25), (Fraction(1280), Fraction(-224), Fraction(13)), "positive-definite"),
    3: ((1, 1, 0, 1, 1), (Fraction(-1, 2), Fraction(3, 4), Fraction(0)), "positive-semidefinite-not-definite"),
    4: ((1, 4, 2, -4, 1), (Fraction(-16), Fraction(4), Fraction(1)), "positive-semidefinite-not-definite"),
    5: ((1, 4, 6, 4, 1), (Fraction(16), Fraction(-12), Fraction(3)), "positive-semidefinite-not-definite"),
    6: ((-1, 6, -13, 24, -36), (Fraction(0), Fraction(-169, 4), Fraction(13, 2)), "negative-semidefinite-not-definite"),
}


def monic_from_expr(expr) -> MonicQuartic:
    """Expand a product in x, y and read off the monic coefficients."""
    poly = sp.Poly(sp.expand(expr), X, Y)
    coeff = {monom: c for monom, c in zip(poly.monoms(), poly.coeffs())}
    lead = coeff[(4, 0)]
    values = [sp.Rational(coeff.get((4 - k, k), 0), lead) for k in (1, 2, 3, 4)]
    return MonicQuartic(*(Fraction(int(v.p), int(v.q)) for v in values))


NINE_CASE_EXPRESSIONS = {
    1: (X**2 - Y**2) * (X**2 - 4 * Y**2),
    2: X**4 + X * Y**3 + Y**4,
    3: (X**2 - Y**2) * (X**2 + 4 * Y**2),
    4: (X - Y) * (X + Y) * (X - 2 * Y) ** 2,
    5: X**4 + X**3 * Y + X * Y**3 + Y**4,
    6: X**4 + 4 * X**3 * Y + 2 * X**2 * Y**2 - 4 * X * Y**3 + Y**4,
    7: X**4 - 8 * X**3 * Y + 26 * X**2 * Y**2 - 40 * X * Y**3 + 25 * Y**4,
    8: (X - Y) ** 3 * (X + 3 * Y),
    9: (X + Y) ** 4,
}


def pytest_addoption(parser):
    parser.addoption(
        "--full-corpus", action="store_true", default=False,
        help="run the random corpora at acceptance size",
    )


def pytest_configure(config):
    if config.getoption("--full-corpus"):
        settings.load_profile("quartic-full")


@pytest.fixture(scope="session")
def corpus_size(request):
    return 10_000 if request.config.getoption("--full-corpus") else 150


@pytest.fixture(scope="session")
def nine_cases():
    return {case_id: monic_from_expr(expr) for case_id, expr in NINE_CASE_EXPRESSIONS.items()}


def random_rational(rng: random.Random, bound: int = 1000) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_monic(rng: random.Random, bound: int = 1000) -> MonicQuartic:
    return MonicQuartic(*(random_rational(rng, bound) for _ in range(4)))


def square_of_quadratic(rng: random.Random) -> MonicQuartic:
    p, q = random_rational(rng, 20), random_rational(rng, 20)
    return monic_from_expr((X**2 + sp.Rational(p.numerator, p.denominator) * X * Y
                            + sp.Rational(q.numerator, q.denominator) * Y**2) ** 2)


def real_root_product(rng: random.Random) -> MonicQuartic:
    r1, r2 = random_rational(rng, 20), random_rational(rng, 20)
    while r2 == r1:
        r2 = random_rational(rng, 20)
    s, t = random_rational(rng, 20), random_rational(rng, 20)
    as_sympy = [sp.Rational(v.numerator, v.denominator) for v in (r1, r2, s, t)]
    return monic_from_expr(
        (X - as_sympy[0] * Y) * (X - as_sympy[1] * Y) * (X**2 + as_sympy[2] * X * Y + as_sympy[3] * Y**2)
    )


def mixed_corpus(size: int, seed: int = 20240611) -> list[MonicQuartic]:
    rng = random.Random(seed)
    forms = []
    for index in range(size):
        kind = index % 4
        if kind == 2:
            forms.append(square_of_quadratic(rng))
        elif kind == 3:
            forms.append(real_root_product(rng))
        else:
            forms.append(random_monic(rng, 1000 if kind == 0 else 10))
    return forms


@pytest.fixture(scope="session")
def corpus(corpus_size):
    return mixed_corpus(corpus_size)
