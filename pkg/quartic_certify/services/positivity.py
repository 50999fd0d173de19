"""Definiteness decisions for binary quartic forms.

The authoritative path is the two exact sign tests at the critical
parameter λ₀: λ₀ against a3²/4 and g(λ₀) against 0. When the form is
positive (semi)definite, 𝐌_{λ₀} is returned as its certificate; when it is
indefinite, two rational points of opposite sign are returned instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from quartic_certify.core.exactnum import QuadExtNumber, Scalar, as_rational, sign
from quartic_certify.core.forms import (
    MonicQuartic,
    NormalizedProblem,
    Orientation,
    evaluate_plain,
)
from quartic_certify.core.pencil import (
    CriticalParam,
    PencilCubic,
    Sym3Matrix,
    negative_side_matrix,
    negative_side_pencil_coeffs,
    critical_param,
    g_eval,
    pencil_coeffs,
    pencil_matrix,
)
from quartic_certify.errors import CrossCheckError
from quartic_certify.services.oracle import Point, witness_search

logger = logging.getLogger(__name__)


class Definiteness(str, Enum):
    POSITIVE_DEFINITE = "positive-definite"
    POSITIVE_SEMIDEFINITE = "positive-semidefinite-not-definite"
    INDEFINITE = "indefinite"
    NEGATIVE_DEFINITE = "negative-definite"
    NEGATIVE_SEMIDEFINITE = "negative-semidefinite-not-definite"
    # the identically zero form: semidefinite on both sides
    DEGENERATE = "identically-relevant-degenerate"

    @property
    def is_definite(self) -> bool:
        return self in (Definiteness.POSITIVE_DEFINITE, Definiteness.NEGATIVE_DEFINITE)

    @property
    def is_semidefinite(self) -> bool:
        return self is not Definiteness.INDEFINITE

    @property
    def on_monic_form(self) -> Definiteness:
        """The verdict as seen on the monic form the decision ran on."""
        if self.is_definite:
            return Definiteness.POSITIVE_DEFINITE
        if self is Definiteness.INDEFINITE:
            return Definiteness.INDEFINITE
        return Definiteness.POSITIVE_SEMIDEFINITE


_NEGATIVE_OF = {
    Definiteness.POSITIVE_DEFINITE: Definiteness.NEGATIVE_DEFINITE,
    Definiteness.POSITIVE_SEMIDEFINITE: Definiteness.NEGATIVE_SEMIDEFINITE,
    Definiteness.INDEFINITE: Definiteness.INDEFINITE,
}


@dataclass(frozen=True)
class Verdict:
    definiteness: Definiteness
    certificate: Sym3Matrix | None = None
    # (point where the form is > 0, point where it is < 0)
    witnesses: tuple[Point, Point] | None = None
    form: MonicQuartic | None = None
    cubic: PencilCubic | None = None
    critical: CriticalParam | None = None
    g_at_critical: Scalar | None = None

    @property
    def threshold(self) -> Fraction | None:
        return self.form.threshold if self.form is not None else None


def sylvester_pd(matrix: Sym3Matrix) -> bool:
    """Positive definite iff all three leading principal minors are > 0."""
    return all(sign(minor) > 0 for minor in matrix.leading_minors())


def sylvester_psd(matrix: Sym3Matrix) -> bool:
    """Positive semidefinite iff all seven principal minors are ≥ 0."""
    return all(sign(minor) >= 0 for minor in matrix.principal_minors())


def _collapse(value: Scalar) -> Scalar:
    return value.collapse() if isinstance(value, QuadExtNumber) else value


def decide_monic(m: MonicQuartic) -> Verdict:
    """PD iff λ₀ > a3²/4 and g(λ₀) > 0; PSD when both hold with equality allowed."""
    cubic = pencil_coeffs(m)
    critical = critical_param(cubic)
    logger.debug("b0=%s b1=%s b2=%s", cubic.b0, cubic.b1, cubic.b2)
    if not critical.is_real:
        return Verdict(Definiteness.INDEFINITE, witnesses=witness_search(m), form=m, cubic=cubic, critical=critical)

    lam0 = critical.value
    g0 = _collapse(g_eval(cubic, lam0))
    above = sign(lam0 - m.threshold)
    positive = sign(g0)
    logger.debug("lambda0=%s g(lambda0)=%s a3^2/4=%s", lam0, g0, m.threshold)

    if above > 0 and positive > 0:
        definiteness = Definiteness.POSITIVE_DEFINITE
    elif above >= 0 and positive >= 0:
        definiteness = Definiteness.POSITIVE_SEMIDEFINITE
    else:
        return Verdict(
            Definiteness.INDEFINITE, witnesses=witness_search(m),
            form=m, cubic=cubic, critical=critical, g_at_critical=g0,
        )

    certificate = pencil_matrix(m, lam0)
    if not sylvester_psd(certificate):
        raise CrossCheckError(f"certificate for {m.coefficients} is not positive semidefinite")
    return Verdict(definiteness, certificate=certificate, form=m, cubic=cubic, critical=critical, g_at_critical=g0)


def decide_negative_side(reduced: MonicQuartic) -> Verdict:
    """Decide −reduced; ``reduced`` is the sign-flipped monic form of a negative-leading quartic."""
    original = reduced.negated()
    if negative_side_pencil_coeffs(*original.coefficients) != pencil_coeffs(reduced):
        raise CrossCheckError(f"negative-side pencil coefficients disagree for {original.coefficients}")

    verdict = decide_monic(reduced)
    certificate = None
    if verdict.certificate is not None:
        certificate = negative_side_matrix(reduced, verdict.critical.value)
    witnesses = None
    if verdict.witnesses is not None:
        positive, negative = verdict.witnesses
        witnesses = (negative, positive)
    return Verdict(
        _NEGATIVE_OF[verdict.definiteness], certificate=certificate, witnesses=witnesses,
        form=reduced, cubic=verdict.cubic, critical=verdict.critical, g_at_critical=verdict.g_at_critical,
    )


def _first_signed(coefficients, points, wanted: int) -> Point | None:
    for point in points:
        if sign(evaluate_plain(coefficients, *point)) == wanted:
            return point
    return None


def decide_degenerate_leading(e3, e2, e1, e0) -> Verdict:
    """Quartics with no x⁴ term: f = y·(e3·x³ + e2·x²y + e1·xy² + e0·y³)."""
    e3, e2, e1, e0 = (as_rational(e) for e in (e3, e2, e1, e0))
    if e3 == e2 == e1 == e0 == 0:
        return Verdict(Definiteness.DEGENERATE)
    if e3 == 0:
        # f = y²·(e2·x² + e1·xy + e0·y²)
        bounded = e1 * e1 <= 4 * e2 * e0
        if bounded and e2 >= 0 and e0 >= 0:
            return Verdict(Definiteness.POSITIVE_SEMIDEFINITE)
        if bounded and e2 <= 0 and e0 <= 0:
            return Verdict(Definiteness.NEGATIVE_SEMIDEFINITE)

    coefficients = (Fraction(0), e3, e2, e1, e0)
    lead = next(e for e in (e3, e2, e1) if e != 0)
    far = 2 + (abs(e3) + abs(e2) + abs(e1) + abs(e0)) / abs(lead)
    xs = [Fraction(0), Fraction(1), Fraction(-1), far, -far]
    if e2 != 0:
        xs.append(-e1 / (2 * e2))
    points = [(x, y) for x in xs for y in (Fraction(1), Fraction(-1))]
    positive = _first_signed(coefficients, points, 1)
    negative = _first_signed(coefficients, points, -1)
    if positive is None or negative is None:
        raise CrossCheckError(f"no sign witnesses found for degenerate quartic {coefficients}")
    return Verdict(Definiteness.INDEFINITE, witnesses=(positive, negative))


def decide(problem: NormalizedProblem) -> Verdict:
    """Route a normalized quartic to its decision path."""
    if problem.degenerate_leading:
        return decide_degenerate_leading(*problem.coefficients[1:])
    if problem.orientation is Orientation.NEGATIVE:
        return decide_negative_side(problem.form)
    return decide_monic(problem.form)


# points where a certificate must reproduce the form exactly
_REPRESENTATION_POINTS = [(1, 0), (0, 1), (1, 1), (1, -1), (2, -3), (-5, 7)]


class PositivityService:
    def decide(self, problem: NormalizedProblem) -> Verdict:
        """Exact verdict with its certificate or witnesses."""
        return decide(problem)

    def verify(self, problem: NormalizedProblem, verdict: Verdict) -> tuple[bool | None, list[str]]:
        """Re-derive the verdict from Sylvester's criterion and audit the certificate.

        Returns (agreement, diagnostics); agreement is None when λ₀ is not real
        and there is no pencil member to test.
        """
        diagnostics: list[str] = []
        critical = verdict.critical
        if verdict.form is None or not critical.is_real:
            return None, diagnostics
        form = verdict.form
        on_form = verdict.definiteness.on_monic_form
        matrix = pencil_matrix(form, critical.value)
        ok = sylvester_pd(matrix) == (on_form is Definiteness.POSITIVE_DEFINITE)
        ok = ok and sylvester_psd(matrix) == on_form.is_semidefinite

        certificate = verdict.certificate
        if certificate is None:
            return ok, diagnostics
        oriented = certificate if problem.orientation is Orientation.POSITIVE else -certificate
        if not sylvester_psd(oriented):
            diagnostics.append("certificate is not semidefinite")
            ok = False
        for x, y in _REPRESENTATION_POINTS:
            expected = evaluate_plain(problem.coefficients, x, y) / problem.scale
            if certificate.quadratic_form(x, y) != expected:
                diagnostics.append(f"certificate does not represent the form at ({x}, {y})")
                ok = False
                break
        if sign(critical.value - form.threshold) == 0:
            a3, a2, a1, a0 = form.coefficients
            rank_one = (
                matrix.rank() <= 1
                and a1 == (4 * a2 * a3 - a3 ** 3) / 8
                and a0 == (4 * a2 - a3 * a3) ** 2 / 64
            )
            if not rank_one:
                diagnostics.append("boundary certificate is not rank one")
                ok = False
        return ok, diagnostics
