import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import WORKED_EXAMPLES, mixed_corpus, random_rational
from quartic_certify.core.exactnum import QuadExtNumber, sign
from quartic_certify.core.forms import MonicQuartic, evaluate, from_plain_coeffs
from quartic_certify.core.pencil import (
    PencilCubic,
    Sym3Matrix,
    boundary_identity_check,
    negative_side_matrix,
    negative_side_pencil_coeffs,
    critical_param,
    discriminant_g,
    g_eval,
    g_prime_eval,
    lower_stationary_point,
    pencil_coeffs,
    pencil_matrix,
)
from quartic_certify.services.classifier import cubic_root_profile

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=100)
monics = st.builds(MonicQuartic, rationals, rationals, rationals, rationals)


@pytest.mark.parametrize("number", sorted(WORKED_EXAMPLES))
def test_pencil_coefficients_of_worked_examples(number):
    plain, expected, _ = WORKED_EXAMPLES[number]
    cubic = pencil_coeffs(from_plain_coeffs(*plain).form)
    assert (cubic.b0, cubic.b1, cubic.b2) == expected


def test_critical_parameter_irrational():
    critical = critical_param(PencilCubic(Fraction(-1, 4), Fraction(1), Fraction(0)))
    assert critical.radicand == 3
    assert critical.value == QuadExtNumber(0, Fraction(2, 3), 3)
    g0 = g_eval(PencilCubic(Fraction(-1, 4), Fraction(1), Fraction(0)), critical.value)
    assert g0 == QuadExtNumber(Fraction(-1, 4), Fraction(4, 9), 3)
    assert sign(g0) == 1


@pytest.mark.parametrize(
    "cubic, expected",
    [
        (PencilCubic(Fraction(1280), Fraction(-224), Fraction(13)), Fraction(56, 3)),
        (PencilCubic(Fraction(-1, 2), Fraction(3, 4), Fraction(0)), Fraction(1)),
        (PencilCubic(Fraction(-16), Fraction(4), Fraction(1)), Fraction(4)),
        (PencilCubic(Fraction(16), Fraction(-12), Fraction(3)), Fraction(4)),
        (PencilCubic(Fraction(0), Fraction(0), Fraction(1)), Fraction(8, 3)),
    ],
)
def test_critical_parameter_rational(cubic, expected):
    critical = critical_param(cubic)
    assert isinstance(critical.value, Fraction)
    assert critical.value == expected
    assert g_prime_eval(cubic, critical.value) == 0


def test_critical_parameter_non_real():
    critical = critical_param(PencilCubic(Fraction(0), Fraction(-1), Fraction(0)))
    assert not critical.is_real
    assert critical.radicand == -3
    assert lower_stationary_point(critical) is None


def test_g_at_critical_for_double_conjugate_pair():
    cubic = PencilCubic(Fraction(1280), Fraction(-224), Fraction(13))
    assert g_eval(cubic, Fraction(56, 3)) == Fraction(64, 27)
    cubic = PencilCubic(Fraction(0), Fraction(0), Fraction(1))
    assert g_eval(cubic, Fraction(8, 3)) == Fraction(64, 27)


def test_lower_stationary_point_is_a_critical_point():
    cubic = PencilCubic(Fraction(-1, 4), Fraction(1), Fraction(0))
    lower = lower_stationary_point(critical_param(cubic))
    assert lower == QuadExtNumber(0, Fraction(-2, 3), 3)
    assert g_prime_eval(cubic, lower) == 0


def test_pencil_matrix_entries():
    m = MonicQuartic.of(4, 6, 4, 1)
    matrix = pencil_matrix(m, 4)
    assert matrix.rows() == [[1, 2, 1], [2, 4, 2], [1, 2, 1]]
    assert matrix.rank() == 1


def test_negative_side_matrix_represents_negated_form():
    reduced = MonicQuartic.of(-6, 13, -24, 36)
    certificate = negative_side_matrix(reduced, Fraction(13))
    assert certificate.rows() == [[-1, 3, 0], [3, -13, 12], [0, 12, -36]]
    assert certificate.quadratic_form(1, 0) == -1
    assert certificate.quadratic_form(1, 1) == -1 + 6 - 13 + 24 - 36


def test_sym3_helpers():
    matrix = Sym3Matrix.from_rows([[2, 1, 0], [1, 2, 1], [0, 1, 2]])
    assert matrix.det() == 4
    assert matrix.leading_minors() == [2, 3, 4]
    assert len(list(matrix.principal_minors())) == 7
    assert matrix.rank() == 3
    assert (-matrix).rows()[1][2] == -1
    with pytest.raises(ValueError):
        Sym3Matrix.from_rows([[1, 2, 0], [0, 1, 0], [0, 0, 1]])


def test_discriminant_signs():
    assert discriminant_g(PencilCubic(Fraction(-1, 4), Fraction(1), Fraction(0))) > 0
    # double root at 16 in the worked double-contact example
    assert discriminant_g(PencilCubic(Fraction(1280), Fraction(-224), Fraction(13))) == 0
    # (x² − y²)(x² + 4y²) gives one real root and a conjugate pair
    assert discriminant_g(pencil_coeffs(MonicQuartic.of(0, 3, 0, -4))) < 0


@pytest.mark.parametrize("coefficients", [(0, 0, 1, 1), (4, 2, -4, 1), (-8, 26, -40, 25), (1, 0, 1, 1)])
def test_boundary_identity_examples(coefficients):
    lhs, rhs = boundary_identity_check(MonicQuartic.of(*coefficients))
    assert lhs == rhs


@given(monics)
def test_boundary_identity(m):
    lhs, rhs = boundary_identity_check(m)
    assert lhs == rhs


@given(monics, rationals)
def test_determinant_is_the_pencil_cubic(m, lam):
    assert pencil_matrix(m, lam).det() == g_eval(pencil_coeffs(m), lam)


@given(monics, rationals, rationals, rationals)
def test_every_member_represents_the_form(m, lam, x, y):
    assert pencil_matrix(m, lam).quadratic_form(x, y) == evaluate(m, x, y)


@given(monics)
def test_negative_side_coefficients_agree_with_reduction(m):
    # −x⁴ + a3·x³y + … is the negation of the monic form with flipped coefficients
    assert negative_side_pencil_coeffs(*m.negated().coefficients) == pencil_coeffs(m)


@settings(max_examples=50)
@given(monics)
def test_discriminant_matches_sympy(m):
    cubic = pencil_coeffs(m)
    lam = sp.Symbol("lam")
    g = sum(sp.Rational(c.numerator, c.denominator) * lam ** (3 - i) for i, c in enumerate(cubic.coefficients()))
    expected = sp.discriminant(g, lam)
    ours = discriminant_g(cubic)
    assert sp.sign(expected) == (ours > 0) - (ours < 0)


@pytest.mark.acceptance
def test_discriminant_sign_tracks_the_conjugate_pair(corpus):
    for m in corpus:
        cubic = pencil_coeffs(m)
        assert (discriminant_g(cubic) < 0) == cubic_root_profile(cubic).conjugate_pair, m


@pytest.mark.acceptance
def test_pencil_identities_on_a_corpus(corpus_size):
    rng = random.Random(97)
    for m in mixed_corpus(max(corpus_size // 10, 50), seed=97):
        cubic = pencil_coeffs(m)
        lhs, rhs = boundary_identity_check(m)
        assert lhs == rhs, m
        for _ in range(5):
            lam = random_rational(rng)
            matrix = pencil_matrix(m, lam)
            assert matrix.det() == g_eval(cubic, lam), (m, lam)
            x, y = random_rational(rng), random_rational(rng)
            assert matrix.quadratic_form(x, y) == evaluate(m, x, y), (m, lam, x, y)
