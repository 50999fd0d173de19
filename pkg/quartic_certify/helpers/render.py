from __future__ import annotations

import threading
from fractions import Fraction

import mpmath

from quartic_certify.core.exactnum import QuadExtNumber, Scalar, sign

_MAX_DPS = 20000

_local = threading.local()


def format_rational(value: Fraction | int) -> str:
    """Always "p/q", so every exact field re-parses with Fraction()."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Read an integer, "p/q" or finite decimal; ValueError names what is wrong."""
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError("zero denominator") from None
    except ValueError:
        raise ValueError("not a rational number or finite decimal") from None


def working_context(dps: int) -> mpmath.MPContext:
    """The calling thread's own mpmath context, set to ``dps`` digits.

    Batch workers compute here and leave the shared ``mpmath.mp`` untouched.
    """
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = _local.ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def to_mpf(value: Fraction | int, ctx: mpmath.MPContext = mpmath.mp) -> mpmath.mpf:
    value = Fraction(value)
    return ctx.mpf(value.numerator) / value.denominator


def surd_parts(value: Scalar) -> tuple[Fraction, Fraction, Fraction]:
    if isinstance(value, QuadExtNumber):
        return value.p, value.q, value.d
    return Fraction(value), Fraction(0), Fraction(0)


def render_decimal(value: Scalar, digits: int) -> str:
    """Decimal rendering of p + q·√d correct to every printed digit.

    The working precision is doubled until two successive evaluations print
    identically, which absorbs cancellation between p and q·√d.
    """
    if sign(value) == 0:
        return "0"
    p, q, d = surd_parts(value)
    dps = digits + 20
    previous = None
    while dps <= _MAX_DPS:
        ctx = working_context(dps)
        current = ctx.nstr(to_mpf(p, ctx) + to_mpf(q, ctx) * ctx.sqrt(to_mpf(d, ctx)), digits)
        if current == previous:
            return current
        previous = current
        dps *= 2
    return previous
