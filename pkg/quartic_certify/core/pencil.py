"""The pencil of conics 𝐌_λ = 𝐀₁ + λ𝐀₂ attached to a monic quartic.

g(λ) = det 𝐌_λ = −¼λ³ + b2·λ² + b1·λ + b0 is the cubic whose roots are the
parameters of the degenerate members; its larger stationary point λ₀ is
the parameter at which the certificate matrix is taken.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from quartic_certify.core.exactnum import QuadExtNumber, Scalar, as_rational, rational_sqrt, sign
from quartic_certify.core.forms import MonicQuartic

logger = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class PencilCubic:
    b0: Fraction
    b1: Fraction
    b2: Fraction

    @property
    def radicand(self) -> Fraction:
        return 3 * self.b1 + 4 * self.b2 * self.b2

    def coefficients(self) -> list[Fraction]:
        """g as a coefficient list, highest degree first."""
        return [-QUARTER, self.b2, self.b1, self.b0]


@dataclass(frozen=True)
class Sym3Matrix:
    """Symmetric 3×3 matrix stored by its upper triangle."""

    m11: Scalar
    m12: Scalar
    m13: Scalar
    m22: Scalar
    m23: Scalar
    m33: Scalar

    @classmethod
    def from_rows(cls, rows) -> Sym3Matrix:
        if any(rows[i][j] != rows[j][i] for i in range(3) for j in range(3)):
            raise ValueError("matrix is not symmetric")
        return cls(rows[0][0], rows[0][1], rows[0][2], rows[1][1], rows[1][2], rows[2][2])

    def rows(self) -> list[list[Scalar]]:
        return [
            [self.m11, self.m12, self.m13],
            [self.m12, self.m22, self.m23],
            [self.m13, self.m23, self.m33],
        ]

    def __neg__(self) -> Sym3Matrix:
        return Sym3Matrix(-self.m11, -self.m12, -self.m13, -self.m22, -self.m23, -self.m33)

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Scalar:
        full = self.rows()
        sub = [[full[i][j] for j in cols] for i in rows]
        if len(sub) == 1:
            return sub[0][0]
        if len(sub) == 2:
            return sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
        return (
            sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
            - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
            + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
        )

    def det(self) -> Scalar:
        return self.minor((0, 1, 2), (0, 1, 2))

    def leading_minors(self) -> list[Scalar]:
        return [self.minor(tuple(range(k)), tuple(range(k))) for k in (1, 2, 3)]

    def principal_minors(self) -> Iterator[Scalar]:
        for size in (1, 2, 3):
            for idx in combinations(range(3), size):
                yield self.minor(idx, idx)

    def rank(self) -> int:
        if sign(self.det()) != 0:
            return 3
        for rows in combinations(range(3), 2):
            for cols in combinations(range(3), 2):
                if sign(self.minor(rows, cols)) != 0:
                    return 2
        if any(sign(e) != 0 for e in (self.m11, self.m12, self.m13, self.m22, self.m23, self.m33)):
            return 1
        return 0

    def quadratic_form(self, x, y) -> Scalar:
        """[x², xy, y²] · M · [x², xy, y²]ᵀ."""
        x, y = as_rational(x), as_rational(y)
        v = (x * x, x * y, y * y)
        full = self.rows()
        total = Fraction(0)
        for i in range(3):
            for j in range(3):
                total = total + full[i][j] * v[i] * v[j]
        return total


@dataclass(frozen=True)
class CriticalParam:
    """λ₀ = (4b2 + 2√d)/3 with d = 3b1 + 4b2²; non-real when d < 0."""

    radicand: Fraction
    value: Scalar | None

    @property
    def is_real(self) -> bool:
        return self.value is not None


def pencil_coeffs(m: MonicQuartic) -> PencilCubic:
    """b0, b1, b2 of g(λ) = det 𝐌_λ = −¼λ³ + b2·λ² + b1·λ + b0."""
    a3, a2, a1, a0 = m.coefficients
    return PencilCubic(
        b0=(-a1 * a1 + a1 * a2 * a3 - a0 * a3 * a3) / 4,
        b1=(4 * a0 - a2 * a2 - a1 * a3) / 4,
        b2=a2 / 2,
    )


def negative_side_pencil_coeffs(a3, a2, a1, a0) -> PencilCubic:
    """b-coefficients written directly in the coefficients of −x⁴ + a3·x³y + … + a0·y⁴."""
    a3, a2, a1, a0 = (as_rational(a) for a in (a3, a2, a1, a0))
    return PencilCubic(
        b0=(-a1 * a1 - a1 * a2 * a3 + a0 * a3 * a3) / 4,
        b1=-(4 * a0 + a2 * a2 + a1 * a3) / 4,
        b2=-a2 / 2,
    )


def pencil_matrix(m: MonicQuartic, lam: Scalar | int) -> Sym3Matrix:
    """𝐌_λ; for every λ, [x², xy, y²]·𝐌_λ·[x², xy, y²]ᵀ equals f(x, y)."""
    lam = as_rational(lam) if isinstance(lam, (int, str)) else lam
    a3, a2, a1, a0 = m.coefficients
    return Sym3Matrix(
        Fraction(1), a3 / 2, (a2 - lam) / 2,
        lam, a1 / 2,
        a0,
    )


def negative_side_matrix(reduced: MonicQuartic, lam: Scalar) -> Sym3Matrix:
    """Negative-side certificate: −𝐌_λ of the sign-flipped (reduced) form."""
    return -pencil_matrix(reduced, lam)


def g_eval(p: PencilCubic, lam: Scalar | int) -> Scalar:
    lam = as_rational(lam) if isinstance(lam, (int, str)) else lam
    return ((-QUARTER * lam + p.b2) * lam + p.b1) * lam + p.b0


def g_prime_eval(p: PencilCubic, lam: Scalar | int) -> Scalar:
    lam = as_rational(lam) if isinstance(lam, (int, str)) else lam
    return (Fraction(-3, 4) * lam + 2 * p.b2) * lam + p.b1


def critical_param(p: PencilCubic) -> CriticalParam:
    """λ₀ = (4b2 + 2√(3b1 + 4b2²))/3, the larger stationary point of g, or non-real."""
    d = p.radicand
    if d < 0:
        logger.debug("radicand %s < 0: critical parameter is non-real", d)
        return CriticalParam(d, None)
    root = rational_sqrt(d)
    if root is not None:
        value: Scalar = (4 * p.b2 + 2 * root) / 3
    else:
        value = QuadExtNumber(4 * p.b2 / 3, Fraction(2, 3), d)
    logger.debug("critical parameter %s (radicand %s)", value, d)
    return CriticalParam(d, value)


def lower_stationary_point(c: CriticalParam) -> Scalar | None:
    """(4b2 − 2√d)/3, the other root of g′."""
    if c.value is None:
        return None
    if isinstance(c.value, QuadExtNumber):
        return c.value.conjugate()
    root = rational_sqrt(c.radicand)
    return c.value - Fraction(4, 3) * root


def discriminant_g(p: PencilCubic) -> Fraction:
    """Discriminant of g; negative exactly when g has a non-real conjugate pair of roots."""
    b0, b1, b2 = p.b0, p.b1, p.b2
    return (16 * (3 * b1 + 4 * b2 * b2) ** 3 - (27 * b0 + 36 * b1 * b2 + 32 * b2 ** 3) ** 2) / 432


def boundary_identity_check(m: MonicQuartic) -> tuple[Fraction, Fraction]:
    """Both sides of g(a3²/4) = −(8a1 − 4a2a3 + a3³)²/256."""
    a3, a2, a1, _ = m.coefficients
    lhs = g_eval(pencil_coeffs(m), m.threshold)
    rhs = -Fraction(1, 256) * (8 * a1 - 4 * a2 * a3 + a3 ** 3) ** 2
    return lhs, rhs
