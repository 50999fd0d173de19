"""Nine-case classification of a monic quartic through the roots of g(λ).

Roots of g are found exactly over ℚ: square-free decomposition, then
factorization of each square-free part over ℚ. Linear factors give the
rational roots; irreducible factors of higher degree give irrational
real roots (isolated in disjoint rational intervals) or a conjugate pair.
Every comparison with a3²/4 is exact.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import sympy as sp

from quartic_certify.core.exactnum import QuadExtNumber, Scalar, rational_sign, sign
from quartic_certify.core.forms import MonicQuartic
from quartic_certify.core.pencil import (
    CriticalParam,
    PencilCubic,
    critical_param,
    g_eval,
    pencil_coeffs,
    pencil_matrix,
)
from quartic_certify.errors import ClassificationError
from quartic_certify.services.positivity import Definiteness, sylvester_psd

logger = logging.getLogger(__name__)

LAMBDA = sp.Symbol("lambda")
X = sp.Symbol("x")

CASE_DESCRIPTIONS: dict[int, str] = {
    1: "four real simple points",
    2: "two pairs of complex conjugate simple points",
    3: "two real simple points + a pair of complex conjugate simple points",
    4: "two real simple points + a real double point (simple-contact)",
    5: "a pair of complex conjugate simple points + a real double point (simple-contact)",
    6: "two real double points (double contact)",
    7: "a pair of complex conjugate double points (double contact)",
    8: "a real simple point + a triple point (three-point contact)",
    9: "a quadruple point (four-point contact)",
}

CASE_CONICS: dict[int, str] = {
    1: "three real line-pairs",
    2: "one real line-pair + two complex conjugate line-pairs",
    3: "one real line-pair + two complex line-pairs",
    4: "two real line-pairs",
    5: "one real line-pair + one complex conjugate line-pair",
    6: "one real repeated line + one real line-pair",
    7: "one real repeated line + one complex conjugate line-pair",
    8: "one real line-pair",
    9: "one real repeated line",
}

SEMIDEFINITE_CASES = frozenset({2, 5, 6, 7, 9})
DEFINITE_CASES = frozenset({2, 7})


def to_sympy(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _poly(coefficients: list[Fraction], var: sp.Symbol) -> sp.Poly:
    return sp.Poly([to_sympy(c) for c in coefficients], var, domain=sp.QQ)


def _horner(coefficients: list[Fraction], value: Fraction) -> Fraction:
    total = Fraction(0)
    for c in coefficients:
        total = total * value + c
    return total


@dataclass(frozen=True)
class IrrationalRoot:
    """A real root of an irreducible factor of degree ≥ 2, isolated in (low, high)."""

    low: Fraction
    high: Fraction
    factor: tuple[Fraction, ...]
    exact: QuadExtNumber | None = None

    def compare(self, value: Fraction) -> int:
        """Sign of (root − value); never 0 since value is rational."""
        if value <= self.low:
            return 1
        if value >= self.high:
            return -1
        at_low = rational_sign(_horner(list(self.factor), self.low))
        at_value = rational_sign(_horner(list(self.factor), value))
        return -1 if at_low != at_value else 1


@dataclass(frozen=True)
class RealRoot:
    value: Fraction | IrrationalRoot
    multiplicity: int

    @property
    def is_rational(self) -> bool:
        return isinstance(self.value, Fraction)

    def compare(self, value: Fraction) -> int:
        if isinstance(self.value, Fraction):
            return rational_sign(self.value - value)
        return self.value.compare(value)

    def exact(self) -> Scalar | None:
        if isinstance(self.value, Fraction):
            return self.value
        return self.value.exact


@dataclass(frozen=True)
class CubicRootProfile:
    real_roots: tuple[RealRoot, ...]
    conjugate_pair: bool
    factors: tuple[tuple[tuple[Fraction, ...], int], ...] = field(default=())

    @property
    def rational_roots(self) -> list[tuple[Fraction, int]]:
        return [(r.value, r.multiplicity) for r in self.real_roots if r.is_rational]

    @property
    def irrational_roots(self) -> list[IrrationalRoot]:
        return [r.value for r in self.real_roots if not r.is_rational]

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.real_roots) + (2 if self.conjugate_pair else 0)


@dataclass(frozen=True)
class IntersectionCase:
    case_id: int
    description: str
    conics: str

    @classmethod
    def of(cls, case_id: int) -> IntersectionCase:
        return cls(case_id, CASE_DESCRIPTIONS[case_id], CASE_CONICS[case_id])


@dataclass(frozen=True)
class QuarticRootNature:
    real_simple: int = 0
    real_double: int = 0
    real_triple: int = 0
    real_quadruple: int = 0
    complex_simple_pairs: int = 0
    complex_double_pairs: int = 0

    @property
    def total_multiplicity(self) -> int:
        return (
            self.real_simple + 2 * self.real_double + 3 * self.real_triple + 4 * self.real_quadruple
            + 2 * self.complex_simple_pairs + 4 * self.complex_double_pairs
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "real_simple": self.real_simple,
            "real_double": self.real_double,
            "real_triple": self.real_triple,
            "real_quadruple": self.real_quadruple,
            "complex_simple_pairs": self.complex_simple_pairs,
            "complex_double_pairs": self.complex_double_pairs,
        }


_NATURE_TO_CASE: dict[tuple[int, ...], int] = {
    (4, 0, 0, 0, 0, 0): 1,
    (0, 0, 0, 0, 2, 0): 2,
    (2, 0, 0, 0, 1, 0): 3,
    (2, 1, 0, 0, 0, 0): 4,
    (0, 1, 0, 0, 1, 0): 5,
    (0, 2, 0, 0, 0, 0): 6,
    (0, 0, 0, 0, 0, 1): 7,
    (1, 0, 1, 0, 0, 0): 8,
    (0, 0, 0, 1, 0, 0): 9,
}


class MemberKind(str, Enum):
    REAL_LINE_PAIR = "real-line-pair"
    CONJUGATE_LINE_PAIR = "complex-conjugate-line-pair"
    REPEATED_LINE = "real-repeated-line"
    COMPLEX_LINE_PAIR = "complex-line-pair"


@dataclass(frozen=True)
class DegenerateMember:
    root: RealRoot | None
    kind: MemberKind | None
    rank: int | None


def _quadratic_roots(factor: tuple[Fraction, ...]) -> tuple[QuadExtNumber, QuadExtNumber]:
    a, b, c = factor
    disc = b * b - 4 * a * c
    centre = -b / (2 * a)
    half_width = abs(1 / (2 * a))
    return QuadExtNumber(centre, -half_width, disc), QuadExtNumber(centre, half_width, disc)


def _real_roots(coefficients: list[Fraction], var: sp.Symbol) -> tuple[list[RealRoot], int, list]:
    """Real roots of a rational polynomial with multiplicities, plus the number
    of non-real conjugate pairs (each counted once) and the irreducible factors."""
    poly = _poly(coefficients, var)
    _, square_free = poly.sqf_list()
    irreducible: list[tuple[sp.Poly, int]] = []
    for part, multiplicity in square_free:
        _, factors = part.factor_list()
        irreducible.extend((f, multiplicity) for f, _ in factors)

    roots: list[RealRoot] = []
    nonreal_pairs = 0
    higher: list[tuple[sp.Poly, int]] = []
    for f, multiplicity in irreducible:
        if f.degree() == 1:
            c1, c0 = (to_fraction(c) for c in f.all_coeffs())
            roots.append(RealRoot(-c0 / c1, multiplicity))
            continue
        real_count = int(f.count_roots())
        nonreal_pairs += multiplicity * (f.degree() - real_count) // 2
        if real_count:
            higher.append((f, multiplicity))

    if higher:
        isolated = sp.intervals([f for f, _ in higher])
        exact_by_factor: dict[int, list[QuadExtNumber]] = {}
        for index, (f, _) in enumerate(higher):
            if f.degree() == 2:
                exact_by_factor[index] = list(
                    _quadratic_roots(tuple(to_fraction(c) for c in f.all_coeffs()))
                )
        for (low, high), indices in isolated:
            for index in indices:
                f, multiplicity = higher[index]
                factor = tuple(to_fraction(c) for c in f.all_coeffs())
                exact = exact_by_factor[index].pop(0) if index in exact_by_factor else None
                root = IrrationalRoot(to_fraction(low), to_fraction(high), factor, exact)
                roots.append(RealRoot(root, multiplicity))

    _sort_mixed(roots)
    factor_list = [(tuple(to_fraction(c) for c in f.all_coeffs()), k) for f, k in irreducible]
    return roots, nonreal_pairs, factor_list


def cubic_root_profile(p: PencilCubic) -> CubicRootProfile:
    """Exact real roots of g in increasing order, with multiplicities."""
    roots, pairs, factors = _real_roots(p.coefficients(), LAMBDA)
    return CubicRootProfile(tuple(roots), pairs > 0, tuple(factors))


def _sort_mixed(roots: list[RealRoot]) -> None:
    """Order rational roots against isolating intervals exactly."""
    def before(a: RealRoot, b: RealRoot) -> bool:
        if isinstance(b.value, Fraction):
            return a.compare(b.value) < 0
        if isinstance(a.value, Fraction):
            return b.compare(a.value) > 0
        return a.value.high <= b.value.low

    for i in range(1, len(roots)):
        j = i
        while j > 0 and before(roots[j], roots[j - 1]):
            roots[j], roots[j - 1] = roots[j - 1], roots[j]
            j -= 1


def case_from_profile(profile: CubicRootProfile, threshold: Fraction) -> int:
    """Case id from the roots of g and their positions against a3²/4."""
    if profile.conjugate_pair:
        return 3
    multiplicities = [r.multiplicity for r in profile.real_roots]
    signs = [r.compare(threshold) for r in profile.real_roots]
    if multiplicities == [1, 1, 1]:
        s1, s2, s3 = signs
        if s3 <= 0:
            return 1
        if s1 <= 0 <= s2:
            return 2
    elif multiplicities == [2, 1]:
        s_double, s_simple = signs
        if s_simple <= 0:
            return 4
        if s_double == 0:
            return 7
    elif multiplicities == [1, 2]:
        s_simple, s_double = signs
        if s_double < 0:
            return 4
        if s_simple <= 0 < s_double:
            return 5
        if s_simple < 0 and s_double == 0:
            return 6
    elif multiplicities == [3]:
        if signs[0] < 0:
            return 8
        if signs[0] == 0:
            return 9
    raise ClassificationError(
        f"root profile {multiplicities} with signs {signs} against {threshold} matches no case"
    )


def classify_case(m: MonicQuartic) -> IntersectionCase:
    """How the two base conics of the pencil of ``m`` meet."""
    profile = cubic_root_profile(pencil_coeffs(m))
    case_id = case_from_profile(profile, m.threshold)
    logger.debug("form %s classified as case %d", m.coefficients, case_id)
    return IntersectionCase.of(case_id)


def quartic_root_nature(m: MonicQuartic) -> QuarticRootNature:
    """Real and non-real roots of f(x, 1), counted by multiplicity."""
    poly = _poly(m.univariate(), X)
    _, square_free = poly.sqf_list()
    real = {1: 0, 2: 0, 3: 0, 4: 0}
    pairs = {1: 0, 2: 0}
    for part, multiplicity in square_free:
        real_count = int(part.count_roots())
        real[multiplicity] += real_count
        nonreal = (part.degree() - real_count) // 2
        if nonreal:
            pairs[multiplicity] += nonreal
    return QuarticRootNature(real[1], real[2], real[3], real[4], pairs[1], pairs[2])


def case_from_nature(nature: QuarticRootNature) -> int:
    """Case id read directly from the root configuration of f(x, 1)."""
    key = (
        nature.real_simple, nature.real_double, nature.real_triple, nature.real_quadruple,
        nature.complex_simple_pairs, nature.complex_double_pairs,
    )
    try:
        return _NATURE_TO_CASE[key]
    except KeyError:
        raise ClassificationError(f"root nature {key} is not a configuration of four points") from None


def critical_facts_hold(
    case_id: int, critical: CriticalParam, g_at_critical: Scalar | None, threshold: Fraction
) -> bool:
    """Whether λ₀ and g(λ₀) sit where ``case_id`` requires."""
    if not critical.is_real:
        return case_id == 3
    s_lam = sign(critical.value - threshold)
    s_g = sign(g_at_critical)
    expected = {
        1: s_lam < 0 and s_g > 0,
        2: s_lam > 0 and s_g > 0,
        3: s_lam < 0 or (s_lam >= 0 and s_g < 0),
        4: s_lam < 0 and s_g >= 0,
        5: s_lam > 0 and s_g == 0,
        6: s_lam == 0 and s_g == 0,
        7: s_lam > 0 and s_g > 0,
        8: s_lam < 0 and s_g == 0,
        9: s_lam == 0 and s_g == 0,
    }
    return expected[case_id]


def critical_facts_for(m: MonicQuartic, case_id: int) -> bool:
    cubic = pencil_coeffs(m)
    critical = critical_param(cubic)
    g0 = g_eval(cubic, critical.value) if critical.is_real else None
    return critical_facts_hold(case_id, critical, g0, m.threshold)


def degenerate_members(m: MonicQuartic) -> list[DegenerateMember]:
    """One member per distinct root of g; a repeated root is still a single conic."""
    profile = cubic_root_profile(pencil_coeffs(m))
    members: list[DegenerateMember] = []
    for root in profile.real_roots:
        lam = root.exact()
        if lam is None:
            members.append(DegenerateMember(root, None, None))
            continue
        matrix = pencil_matrix(m, lam)
        rank = matrix.rank()
        if rank == 1:
            kind = MemberKind.REPEATED_LINE
        elif sylvester_psd(matrix):
            kind = MemberKind.CONJUGATE_LINE_PAIR
        else:
            kind = MemberKind.REAL_LINE_PAIR
        members.append(DegenerateMember(root, kind, rank))
    if profile.conjugate_pair:
        members.extend(DegenerateMember(None, MemberKind.COMPLEX_LINE_PAIR, None) for _ in range(2))
    return members


def check_member_positions(m: MonicQuartic) -> list[str]:
    """Violations of the rank/position statements on degenerate members; empty when all hold."""
    threshold = m.threshold
    violations: list[str] = []
    for member in degenerate_members(m):
        if member.root is None or member.kind is None:
            continue
        position = member.root.compare(threshold)
        if member.kind is MemberKind.REAL_LINE_PAIR and (member.rank != 2 or position > 0):
            violations.append(f"real line-pair at {member.root} lies above {threshold}")
        if member.kind is MemberKind.CONJUGATE_LINE_PAIR and (member.rank != 2 or position < 0):
            violations.append(f"conjugate line-pair at {member.root} lies below {threshold}")
        repeated = member.kind is MemberKind.REPEATED_LINE
        if repeated != (position == 0 and member.root.multiplicity >= 2):
            violations.append(f"repeated-line condition fails at {member.root}")
    return violations


@dataclass(frozen=True)
class CaseCheck:
    case: IntersectionCase
    nature: QuarticRootNature
    members: list[DegenerateMember]


class CaseClassifier:
    def check(self, m: MonicQuartic, on_form: Definiteness) -> tuple[CaseCheck | None, bool, list[str]]:
        """Classify ``m`` twice and hold both readings against the verdict.

        The case from the roots of g must match the case from the roots of
        f(x, 1), fit the critical-parameter facts, imply ``on_form`` and leave
        every degenerate member where its kind allows. Returns the
        classification (None when no case fits), the agreement flag and the
        diagnostics.
        """
        diagnostics: list[str] = []
        try:
            case = classify_case(m)
            nature = quartic_root_nature(m)
            members = degenerate_members(m)
            from_nature = case_from_nature(nature)
        except ClassificationError as exc:
            return None, False, [str(exc)]

        ok = True
        if from_nature != case.case_id:
            diagnostics.append(f"root nature gives case {from_nature}, pencil gives {case.case_id}")
            ok = False
        if not critical_facts_for(m, case.case_id):
            diagnostics.append(f"critical-parameter facts fail for case {case.case_id}")
            ok = False
        if (on_form is Definiteness.POSITIVE_DEFINITE) != (case.case_id in DEFINITE_CASES):
            ok = False
        if on_form.is_semidefinite != (case.case_id in SEMIDEFINITE_CASES):
            ok = False
        violations = check_member_positions(m)
        diagnostics.extend(violations)
        return CaseCheck(case, nature, members), ok and not violations, diagnostics
