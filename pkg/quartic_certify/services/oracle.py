"""Numeric sanity oracle and exact sign-witness search.

The circle estimate is advisory: it samples f(cos θ, sin θ) in float64 and
polishes the best candidates with mpmath, but it never decides anything.
Witness points, in contrast, are rational and checked exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
import numpy as np
import sympy as sp

from quartic_certify.core.forms import MonicQuartic, evaluate
from quartic_certify.errors import PreconditionError
from quartic_certify.helpers.render import to_mpf, working_context

logger = logging.getLogger(__name__)

Point = tuple[Fraction, Fraction]

_REFINE_CANDIDATES = 8
_REFINE_STEPS = 90
_REFINE_DPS = 40
_WITNESS_SAMPLES = 1024
_RATIONALIZE_BOUNDS = (10, 1000, 10**6, 10**10)


@dataclass(frozen=True)
class CircleEstimate:
    min_value: mpmath.mpf
    argmin: mpmath.mpf
    samples: int


def _circle_value(ctx, coefficients, theta):
    c, s = ctx.cos(theta), ctx.sin(theta)
    a4, a3, a2, a1, a0 = coefficients
    return a4 * c**4 + a3 * c**3 * s + a2 * c**2 * s**2 + a1 * c * s**3 + a0 * s**4


def _float_coefficients(m: MonicQuartic) -> list[float]:
    """f/M in float64, M the largest coefficient magnitude; the minimiser is unchanged."""
    exact = [Fraction(1), *m.coefficients]
    scale = max(abs(a) for a in exact)
    return [float(a / scale) for a in exact]


def circle_min_estimate(m: MonicQuartic, n: int) -> CircleEstimate:
    """Minimum of f on the unit circle from n samples, polished at high precision."""
    if n < 8:
        raise PreconditionError(f"circle estimate needs at least 8 samples, got {n}")
    a4, a3, a2, a1, a0 = _float_coefficients(m)
    # f(−x, −y) = f(x, y), so half a turn covers the circle
    theta = np.linspace(0.0, np.pi, n, endpoint=False)
    c, s = np.cos(theta), np.sin(theta)
    values = a4 * c**4 + a3 * c**3 * s + a2 * c**2 * s**2 + a1 * c * s**3 + a0 * s**4

    local = np.flatnonzero((values <= np.roll(values, 1)) & (values <= np.roll(values, -1)))
    if local.size == 0:
        local = np.arange(n)
    candidates = local[np.argsort(values[local])][:_REFINE_CANDIDATES]

    ctx = working_context(_REFINE_DPS)
    coefficients = [ctx.mpf(1), *(to_mpf(a, ctx) for a in m.coefficients)]
    step = ctx.pi / n
    best_value, best_theta = None, None
    for index in candidates:
        lo = ctx.mpf(float(theta[index])) - step
        hi = ctx.mpf(float(theta[index])) + step
        for _ in range(_REFINE_STEPS):
            left = lo + (hi - lo) / 3
            right = hi - (hi - lo) / 3
            if _circle_value(ctx, coefficients, left) <= _circle_value(ctx, coefficients, right):
                hi = right
            else:
                lo = left
        centre = (lo + hi) / 2
        value = _circle_value(ctx, coefficients, centre)
        if best_value is None or value < best_value:
            best_value, best_theta = value, centre
    best_theta = best_theta % ctx.pi
    logger.debug("circle minimum %s at theta=%s over %d samples", best_value, best_theta, n)
    return CircleEstimate(best_value, best_theta, n)


def _integral_point(x: Fraction, y: Fraction) -> Point:
    """Scale (x, y) to coprime integers; the sign of a quartic form is unchanged."""
    scale = x.denominator * y.denominator
    xi, yi = x * scale, y * scale
    g = gcd(int(xi), int(yi)) or 1
    return Fraction(int(xi) // g), Fraction(int(yi) // g)


def _rationalized_angle(theta) -> list[Point]:
    x, y = float(mpmath.cos(theta)), float(mpmath.sin(theta))
    points = []
    for bound in _RATIONALIZE_BOUNDS:
        px = Fraction(x).limit_denominator(bound)
        py = Fraction(y).limit_denominator(bound)
        if px != 0 or py != 0:
            points.append(_integral_point(px, py))
    return points


def _root_gap_points(m: MonicQuartic) -> list[Point]:
    """Rational points strictly between consecutive real roots of f(x, 1)."""
    poly = sp.Poly([sp.Rational(c.numerator, c.denominator) for c in m.univariate()], sp.Symbol("x"))
    points: list[Point] = []
    for eps in (None, sp.Rational(1, 2**20), sp.Rational(1, 2**60)):
        isolated = poly.intervals(eps=eps) if eps is not None else poly.intervals()
        bounds = [
            (Fraction(int(sp.Rational(a).p), int(sp.Rational(a).q)),
             Fraction(int(sp.Rational(b).p), int(sp.Rational(b).q)))
            for (a, b), _ in isolated
        ]
        for (_, upper), (lower, _) in zip(bounds, bounds[1:]):
            for x in (upper, (upper + lower) / 2, lower):
                points.append(_integral_point(x, Fraction(1)))
    return points


def witness_search(m: MonicQuartic) -> tuple[Point, Point]:
    """(positive point, negative point) for an indefinite monic form.

    Small points near the sampled minimum are tried first, then points
    between the real roots of f(x, 1), which always contain a negative one.
    """
    positive: Point = (Fraction(1), Fraction(0))  # f(1, 0) = 1
    estimate = circle_min_estimate(m, _WITNESS_SAMPLES)
    for point in _rationalized_angle(estimate.argmin) + _root_gap_points(m):
        if evaluate(m, *point) < 0:
            logger.debug("negative witness %s for %s", point, m.coefficients)
            return positive, point
    raise PreconditionError(f"form {m.coefficients} takes no negative value; it is not indefinite")


class CircleOracle:
    """Compares a verdict with the sampled minimum of the form on the unit circle."""

    def __init__(self, samples: int = 4096, tolerance: float = 1e-6):
        self.samples = samples
        self.tolerance = tolerance

    def estimate(self, m: MonicQuartic) -> CircleEstimate:
        """Polished circle minimum at this oracle's sample count."""
        return circle_min_estimate(m, self.samples)

    def agrees(self, estimate: CircleEstimate, semidefinite: bool) -> bool:
        """A semidefinite verdict needs min ≥ −tolerance, any other needs min ≤ tolerance."""
        minimum = float(estimate.min_value)
        if semidefinite:
            return minimum >= -self.tolerance
        return minimum <= self.tolerance
