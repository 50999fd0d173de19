from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from quartic_certify.config.env import CertifySettings
from quartic_certify.core.exactnum import Scalar
from quartic_certify.core.pencil import discriminant_g
from quartic_certify.errors import ClassificationError, CoefficientParseError, CrossCheckError
from quartic_certify.helpers.render import format_rational, render_decimal, surd_parts
from quartic_certify.services.classical import ClassicalCriterion
from quartic_certify.services.classifier import CaseClassifier
from quartic_certify.services.oracle import CircleOracle
from quartic_certify.services.positivity import Definiteness, PositivityService, Verdict
from quartic_certify.validations.coefficients import QuarticInput
from quartic_certify.validations.report import (
    AgreementReport,
    BatchSummary,
    CaseReport,
    ClassicalReport,
    ExactValue,
    LineError,
    OracleReport,
    PencilReport,
    Report,
    WitnessReport,
)

logger = logging.getLogger(__name__)

EXIT_DEFINITE = 0
EXIT_SEMIDEFINITE = 1
EXIT_INDEFINITE = 2
EXIT_PARSE_ERROR = 64
EXIT_DISAGREEMENT = 70

EXIT_CODES = {
    Definiteness.POSITIVE_DEFINITE: EXIT_DEFINITE,
    Definiteness.NEGATIVE_DEFINITE: EXIT_DEFINITE,
    Definiteness.POSITIVE_SEMIDEFINITE: EXIT_SEMIDEFINITE,
    Definiteness.NEGATIVE_SEMIDEFINITE: EXIT_SEMIDEFINITE,
    Definiteness.DEGENERATE: EXIT_SEMIDEFINITE,
    Definiteness.INDEFINITE: EXIT_INDEFINITE,
}

BatchRecord = Union[Report, LineError]


@dataclass(frozen=True)
class CertifyOptions:
    crosscheck: bool = True
    include_case: bool = True
    precision: int = 12
    samples: int = 4096
    tolerance: float = 1e-6
    workers: int = 4

    @classmethod
    def from_settings(cls, settings: CertifySettings, **overrides) -> CertifyOptions:
        values = {
            "crosscheck": settings.crosscheck,
            "precision": settings.precision,
            "samples": settings.circle_samples,
            "tolerance": settings.oracle_tolerance,
            "workers": settings.workers,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class CertifyController:
    """Runs the exact decision, the cross-checks and the report for each quartic."""

    def __init__(self, options: CertifyOptions | None = None):
        self.options = options or CertifyOptions()
        self.positivity = PositivityService()
        self.classifier = CaseClassifier()
        self.classical = ClassicalCriterion()
        self.oracle = CircleOracle(self.options.samples, self.options.tolerance)

    def certify_tokens(self, tokens: Sequence[str]) -> Report:
        return self.certify(QuarticInput.from_tokens(tokens))

    def certify(self, quartic: QuarticInput) -> Report:
        """Decide one quartic; disagreements set exit code 70 instead of raising."""
        problem = quartic.normalized()
        echo = [format_rational(c) for c in quartic.coefficients]
        orientation = problem.orientation.value if problem.orientation is not None else None
        try:
            verdict = self.positivity.decide(problem)
        except (CrossCheckError, ClassificationError) as exc:
            logger.error("decision failed for %s: %s", echo, exc)
            return Report(
                input=echo, verdict="undecided", orientation=orientation,
                agreement=AgreementReport(sylvester=False), diagnostics=[str(exc)],
                exit_code=EXIT_DISAGREEMENT,
            )

        diagnostics: list[str] = []
        report = Report(
            input=echo,
            verdict=verdict.definiteness.value,
            orientation=orientation,
            witnesses=self._witnesses(verdict),
            agreement=AgreementReport(),
            exit_code=EXIT_CODES[verdict.definiteness],
        )
        agreement = report.agreement
        if verdict.form is not None:
            self._fill_pencil(report, verdict)
            agreement.sylvester, found = self.positivity.verify(problem, verdict)
            diagnostics.extend(found)
            if self.options.include_case:
                report.case, agreement.cases = self._check_cases(verdict, diagnostics)
            if self.options.crosscheck:
                report.classical, agreement.classical = self._check_classical(verdict)
                report.oracle, agreement.oracle = self._check_oracle(verdict)

        if not agreement.all_hold():
            for flag, value in agreement.model_dump().items():
                if value is False:
                    diagnostics.append(f"{flag} cross-check disagrees with the verdict")
            logger.error("cross-check disagreement for %s: %s", echo, "; ".join(diagnostics))
            report.exit_code = EXIT_DISAGREEMENT
        report.diagnostics = diagnostics
        return report

    def certify_batch(self, lines: Iterable[str]) -> tuple[list[BatchRecord], BatchSummary]:
        """Decide every non-comment line on the worker pool, keeping input order."""
        jobs = []
        for number, raw in enumerate(lines, start=1):
            content = raw.split("#", 1)[0].strip()
            if content:
                jobs.append((number, content))
        with ThreadPoolExecutor(max_workers=self.options.workers) as pool:
            records = list(pool.map(self._certify_line, jobs))
        return records, self.summarize(records)

    def _certify_line(self, job: tuple[int, str]) -> BatchRecord:
        number, content = job
        try:
            report = self.certify_tokens(content.split())
        except CoefficientParseError as exc:
            logger.warning("line %d: %s", number, exc)
            return LineError(line=number, error=str(exc), position=exc.position)
        return report.model_copy(update={"line": number})

    @staticmethod
    def summarize(records: Sequence[BatchRecord]) -> BatchSummary:
        """Verdict counts; the exit code is 70 on any disagreement, else 64 on any parse error."""
        counts = {d.value: 0 for d in Definiteness}
        errors = 0
        disagreed = False
        for record in records:
            if isinstance(record, LineError):
                errors += 1
                continue
            counts[record.verdict] = counts.get(record.verdict, 0) + 1
            disagreed = disagreed or record.exit_code == EXIT_DISAGREEMENT
        if disagreed:
            exit_code = EXIT_DISAGREEMENT
        elif errors:
            exit_code = EXIT_PARSE_ERROR
        else:
            exit_code = 0
        return BatchSummary(summary=counts, lines=len(records), errors=errors, exit_code=exit_code)

    def _exact(self, value: Scalar, radicand: Fraction) -> ExactValue:
        p, q, d = surd_parts(value)
        return ExactValue(
            p=format_rational(p),
            q=format_rational(q),
            d=format_rational(d if q != 0 else radicand),
            decimal=render_decimal(value, self.options.precision),
        )

    def _fill_pencil(self, report: Report, verdict: Verdict) -> None:
        form, cubic, critical = verdict.form, verdict.cubic, verdict.critical
        report.a3_sq_over_4 = format_rational(form.threshold)
        report.pencil = PencilReport(
            b0=format_rational(cubic.b0),
            b1=format_rational(cubic.b1),
            b2=format_rational(cubic.b2),
            discriminant=format_rational(discriminant_g(cubic)),
        )
        if not critical.is_real:
            report.lambda0 = ExactValue(real=False, d=format_rational(critical.radicand))
            return
        report.lambda0 = self._exact(critical.value, critical.radicand)
        report.g_lambda0 = self._exact(verdict.g_at_critical, critical.radicand)
        if verdict.certificate is not None:
            report.certificate = [
                [self._exact(entry, critical.radicand) for entry in row]
                for row in verdict.certificate.rows()
            ]

    @staticmethod
    def _witnesses(verdict: Verdict) -> WitnessReport | None:
        if verdict.witnesses is None:
            return None
        positive, negative = verdict.witnesses
        return WitnessReport(
            positive=[format_rational(c) for c in positive],
            negative=[format_rational(c) for c in negative],
        )

    def _check_cases(self, verdict: Verdict, diagnostics: list[str]) -> tuple[CaseReport | None, bool]:
        checked, ok, found = self.classifier.check(verdict.form, verdict.definiteness.on_monic_form)
        diagnostics.extend(found)
        if checked is None:
            return None, False
        report = CaseReport(
            id=checked.case.case_id,
            description=checked.case.description,
            conics=checked.case.conics,
            root_nature=checked.nature.as_dict(),
            members=[m.kind.value if m.kind is not None else None for m in checked.members],
        )
        return report, ok

    def _check_classical(self, verdict: Verdict) -> tuple[ClassicalReport, bool]:
        positive_definite = verdict.definiteness.on_monic_form is Definiteness.POSITIVE_DEFINITE
        q, pd, ok = self.classical.check(verdict.form, positive_definite)
        report = ClassicalReport(
            G=format_rational(q.G), H=format_rational(q.H), I=format_rational(q.I),
            J=format_rational(q.J), Delta=format_rational(q.delta), aux=format_rational(q.aux), pd=pd,
        )
        return report, ok

    def _check_oracle(self, verdict: Verdict) -> tuple[OracleReport, bool]:
        estimate = self.oracle.estimate(verdict.form)
        ok = self.oracle.agrees(estimate, verdict.definiteness.on_monic_form.is_semidefinite)
        report = OracleReport(
            circle_min=float(estimate.min_value), argmin=float(estimate.argmin), samples=estimate.samples,
        )
        return report, ok
