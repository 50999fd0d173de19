from fractions import Fraction
from typing import Annotated, Sequence

from pydantic import BaseModel, BeforeValidator, ConfigDict, ValidationError

from quartic_certify.core.forms import NormalizedProblem, from_plain_coeffs
from quartic_certify.errors import CoefficientParseError
from quartic_certify.helpers.render import parse_rational

COEFFICIENT_NAMES = ("e4", "e3", "e2", "e1", "e0")


def _parse_rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    return parse_rational(str(value))


ExactRational = Annotated[Fraction, BeforeValidator(_parse_rational)]


class QuarticInput(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    e4: ExactRational
    e3: ExactRational
    e2: ExactRational
    e1: ExactRational
    e0: ExactRational

    @classmethod
    def from_tokens(cls, tokens: Sequence[str]) -> "QuarticInput":
        if len(tokens) < len(COEFFICIENT_NAMES):
            position = len(tokens) + 1
            raise CoefficientParseError(position, COEFFICIENT_NAMES[position - 1], "", "missing")
        if len(tokens) > len(COEFFICIENT_NAMES):
            raise CoefficientParseError(6, "extra", tokens[5], "one coefficient too many")
        try:
            return cls.model_validate(dict(zip(COEFFICIENT_NAMES, tokens)))
        except ValidationError as exc:
            error = exc.errors()[0]
            name = str(error["loc"][0])
            position = COEFFICIENT_NAMES.index(name) + 1
            raise CoefficientParseError(position, name, tokens[position - 1], error["msg"]) from exc

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.e4, self.e3, self.e2, self.e1, self.e0)

    def normalized(self) -> NormalizedProblem:
        return from_plain_coeffs(*self.coefficients)
