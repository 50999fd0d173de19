"""Binary quartic forms in monic and binomially-weighted shape."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from quartic_certify.core.exactnum import as_rational


@dataclass(frozen=True)
class MonicQuartic:
    """f(x, y) = x⁴ + a3·x³y + a2·x²y² + a1·xy³ + a0·y⁴."""

    a3: Fraction
    a2: Fraction
    a1: Fraction
    a0: Fraction

    @classmethod
    def of(cls, a3, a2, a1, a0) -> MonicQuartic:
        return cls(as_rational(a3), as_rational(a2), as_rational(a1), as_rational(a0))

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a3, self.a2, self.a1, self.a0)

    @property
    def threshold(self) -> Fraction:
        """a3²/4, the value every degenerate-member parameter is compared with."""
        return self.a3 * self.a3 / 4

    def negated(self) -> MonicQuartic:
        """Coefficients of x⁴ − a3·x³y − a2·x²y² − a1·xy³ − a0·y⁴."""
        return MonicQuartic(-self.a3, -self.a2, -self.a1, -self.a0)

    def univariate(self) -> list[Fraction]:
        """Coefficients of p(x) = f(x, 1), highest degree first."""
        return [Fraction(1), self.a3, self.a2, self.a1, self.a0]


@dataclass(frozen=True)
class GeneralQuartic:
    """V(x, y) = c0·x⁴ + 4c1·x³y + 6c2·x²y² + 4c3·xy³ + c4·y⁴."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction

    @classmethod
    def of(cls, c0, c1, c2, c3, c4) -> GeneralQuartic:
        return cls(*(as_rational(c) for c in (c0, c1, c2, c3, c4)))


class Orientation(str, Enum):
    POSITIVE = "positive-side"
    NEGATIVE = "negative-side"


@dataclass(frozen=True)
class NormalizedProblem:
    """A plain quartic reduced to a monic one, remembering how to map verdicts back.

    ``form`` and ``orientation`` are None exactly when the leading coefficient
    was zero; the original coefficients are then needed by the degenerate
    decision path.
    """

    form: MonicQuartic | None
    orientation: Orientation | None
    degenerate_leading: bool
    coefficients: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    @property
    def scale(self) -> Fraction:
        return abs(self.coefficients[0])


def from_plain_coeffs(e4, e3, e2, e1, e0) -> NormalizedProblem:
    """Divide by |e4| so the decision always runs on a monic form."""
    coeffs = tuple(as_rational(e) for e in (e4, e3, e2, e1, e0))
    lead = coeffs[0]
    if lead == 0:
        return NormalizedProblem(None, None, True, coeffs)
    # For lead < 0 this is −f/|lead|, i.e. the sign-flipped monic form.
    monic = MonicQuartic(*(e / lead for e in coeffs[1:]))
    orientation = Orientation.POSITIVE if lead > 0 else Orientation.NEGATIVE
    return NormalizedProblem(monic, orientation, False, coeffs)


def to_weighted(m: MonicQuartic) -> GeneralQuartic:
    """The same form as 1·x⁴ + 4c1·x³y + 6c2·x²y² + 4c3·xy³ + c4·y⁴."""
    return GeneralQuartic(Fraction(1), m.a3 / 4, m.a2 / 6, m.a1 / 4, m.a0)


def from_weighted(v: GeneralQuartic) -> MonicQuartic:
    """Inverse of to_weighted; scales by 1/c0 when c0 is not 1."""
    if v.c0 == 0:
        raise ValueError("a weighted quartic with c0 = 0 has no monic shape")
    return MonicQuartic(4 * v.c1 / v.c0, 6 * v.c2 / v.c0, 4 * v.c3 / v.c0, v.c4 / v.c0)


def evaluate(m: MonicQuartic, x, y) -> Fraction:
    x, y = as_rational(x), as_rational(y)
    # Horner in x with y-powers carried along
    return (((x + m.a3 * y) * x + m.a2 * y * y) * x + m.a1 * y ** 3) * x + m.a0 * y ** 4


def evaluate_plain(coefficients, x, y) -> Fraction:
    """Value of e4·x⁴ + e3·x³y + e2·x²y² + e1·xy³ + e0·y⁴."""
    x, y = as_rational(x), as_rational(y)
    total = Fraction(0)
    for power, e in enumerate(coefficients):
        total += as_rational(e) * x ** (4 - power) * y ** power
    return total
