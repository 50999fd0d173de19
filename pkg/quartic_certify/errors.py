class QuarticError(Exception):
    """Base class for every error raised by quartic_certify."""


class CoefficientParseError(QuarticError):
    def __init__(self, position: int, name: str, text: str, reason: str = "not a rational number"):
        self.position = position
        self.name = name
        self.text = text
        self.reason = reason
        super().__init__(f"argument {position} ({name}): {text!r} is {reason}")


class RadicandMismatchError(QuarticError):
    pass


class PreconditionError(QuarticError):
    pass


class ClassificationError(QuarticError):
    """A root profile of g(λ) matched no row of the degenerate-member table."""


class CrossCheckError(QuarticError):
    """Two independent decision paths disagreed."""
