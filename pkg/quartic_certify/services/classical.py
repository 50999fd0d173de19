"""The discriminant-based criterion for positive definiteness.

Used only as an independent oracle against the pencil criterion; it never
decides a reported verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from quartic_certify.core.forms import GeneralQuartic, MonicQuartic, to_weighted
from quartic_certify.errors import PreconditionError


@dataclass(frozen=True)
class ClassicalQuantities:
    G: Fraction
    H: Fraction
    I: Fraction  # noqa: E741
    J: Fraction
    delta: Fraction
    aux: Fraction  # 12H² − c0²I


def classical_quantities(v: GeneralQuartic) -> ClassicalQuantities:
    """G, H, I, J and Δ = I³ − 27J² of the weighted form; Δ has the sign of its discriminant."""
    c0, c1, c2, c3, c4 = v.c0, v.c1, v.c2, v.c3, v.c4
    G = c0 * c0 * c3 - 3 * c0 * c1 * c2 + 2 * c1 ** 3
    H = c0 * c2 - c1 * c1
    I = c0 * c4 - 4 * c1 * c3 + 3 * c2 * c2  # noqa: E741
    J = (
        c0 * (c2 * c4 - c3 * c3)
        - c1 * (c1 * c4 - c2 * c3)
        + c2 * (c1 * c3 - c2 * c2)
    )
    return ClassicalQuantities(
        G=G, H=H, I=I, J=J,
        delta=I ** 3 - 27 * J * J,
        aux=12 * H * H - c0 * c0 * I,
    )


def classical_is_pd(v: GeneralQuartic) -> bool:
    """Positive definiteness from the signs of Δ, G, H and 12H² − c0²I (needs c0 > 0)."""
    if v.c0 <= 0:
        raise PreconditionError(f"the discriminant criterion needs c0 > 0, got {v.c0}")
    q = classical_quantities(v)
    if q.delta == 0 and q.G == 0 and q.aux == 0 and q.H > 0:
        return True
    if q.delta > 0 and q.H >= 0:
        return True
    return q.delta > 0 and q.H < 0 and q.aux < 0


class ClassicalCriterion:
    def check(self, m: MonicQuartic, positive_definite: bool) -> tuple[ClassicalQuantities, bool, bool]:
        """(quantities, classical PD answer, whether it matches ``positive_definite``)."""
        weighted = to_weighted(m)
        pd = classical_is_pd(weighted)
        return classical_quantities(weighted), pd, pd == positive_definite
