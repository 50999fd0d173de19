"""Exact arithmetic over ℚ and over real quadratic extensions ℚ(√d).

Rationals are ``fractions.Fraction`` values, which are always kept in
canonical form (positive denominator, coprime parts). ``QuadExtNumber``
holds p + q·√d with rational p, q, d and decides its sign without ever
extracting a root numerically.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import isqrt
from typing import Callable, TypeAlias, Union

from quartic_certify.errors import PreconditionError, RadicandMismatchError

Rational: TypeAlias = Fraction
Scalar: TypeAlias = Union[Fraction, "QuadExtNumber"]

_RATIONAL_OPS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def as_rational(value: int | Fraction | str) -> Fraction:
    """Convert an int, Fraction or decimal/"p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    try:
        fn = _RATIONAL_OPS[op]
    except KeyError:
        raise ValueError(f"unsupported rational operation {op!r}") from None
    return fn(as_rational(a), as_rational(b))


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if it is irrational."""
    if value < 0:
        return None
    num_root = isqrt(value.numerator)
    den_root = isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def rational_sign(value: int | Fraction) -> int:
    return (value > 0) - (value < 0)


class QuadExtNumber:
    """The real number p + q·√d with rational p, q and rational d ≥ 0."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p: int | Fraction, q: int | Fraction = 0, d: int | Fraction = 0):
        p, q, d = as_rational(p), as_rational(q), as_rational(d)
        if d < 0:
            raise PreconditionError(f"radicand must be non-negative, got {d}")
        if q != 0:
            root = rational_sqrt(d)
            if root is not None:
                p, q = p + q * root, Fraction(0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExtNumber is immutable")

    @classmethod
    def sqrt(cls, d: int | Fraction) -> QuadExtNumber:
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def collapse(self) -> Scalar:
        """Return a plain Fraction when the surd part vanished."""
        return self.p if self.q == 0 else self

    def conjugate(self) -> QuadExtNumber:
        return QuadExtNumber(self.p, -self.q, self.d)

    def sign(self) -> int:
        return quadext_sign(self)

    def _coerce(self, other) -> QuadExtNumber | None:
        if isinstance(other, QuadExtNumber):
            if other.d != self.d and other.q != 0 and self.q != 0:
                raise RadicandMismatchError(
                    f"cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtNumber(other, 0, self.d)
        return None

    def _radicand(self, other: QuadExtNumber) -> Fraction:
        return self.d if self.q != 0 else other.d

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExtNumber(self.p + other.p, self.q + other.q, self._radicand(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadExtNumber(-self.p, -self.q, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExtNumber(self.p - other.p, self.q - other.q, self._radicand(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._radicand(other)
        return QuadExtNumber(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + other.p * self.q,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Only division by a rational is needed for the pencil entries.
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QuadExtNumber division by zero")
            return QuadExtNumber(self.p / other, self.q / other, self.d)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = QuadExtNumber(1, 0, self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except RadicandMismatchError:
            return False
        if other is None:
            return NotImplemented
        return quadext_sign(self - other) == 0

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __lt__(self, other):
        return quadext_sign(self - other) < 0

    def __le__(self, other):
        return quadext_sign(self - other) <= 0

    def __gt__(self, other):
        return quadext_sign(self - other) > 0

    def __ge__(self, other):
        return quadext_sign(self - other) >= 0

    def __repr__(self):
        return f"QuadExtNumber({self.p}, {self.q}, {self.d})"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.d})"


def quadext_arith(a: QuadExtNumber, b: QuadExtNumber, op: str) -> QuadExtNumber:
    if a.d != b.d:
        raise RadicandMismatchError(f"radicands differ: {a.d} != {b.d}")
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    raise ValueError(f"unsupported Q(sqrt d) operation {op!r}")


def quadext_sign(a: QuadExtNumber) -> int:
    """Exact sign of p + q·√d by case analysis; no root is ever extracted."""
    sp, sq = rational_sign(a.p), rational_sign(a.q)
    if sq == 0 or a.d == 0:
        return sp
    if sp == 0:
        return sq
    if sp == sq:
        return sp
    # opposite signs: |p| against |q|·√d
    return sp * rational_sign(a.p * a.p - a.q * a.q * a.d)


def sign(value: int | Scalar) -> int:
    if isinstance(value, QuadExtNumber):
        return quadext_sign(value)
    return rational_sign(value)
