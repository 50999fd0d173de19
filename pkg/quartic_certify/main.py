import logging
import sys
from pathlib import Path

import click
import orjson
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from quartic_certify.config.env import LOG_LEVELS, EnvConfig
from quartic_certify.config.log import setup_logging
from quartic_certify.controllers.certify_controller import (
    EXIT_PARSE_ERROR,
    CertifyController,
    CertifyOptions,
)
from quartic_certify.errors import CoefficientParseError
from quartic_certify.validations.report import Report

logger = logging.getLogger("quartic_certify")

console = Console()


def _dump(model) -> str:
    return orjson.dumps(model.model_dump(mode="json")).decode()


def _print_summary(report: Report) -> None:
    table = Table(title=f"quartic {' '.join(report.input)}", show_header=False)
    table.add_column("field", style="bold")
    table.add_column("value")
    table.add_row("verdict", report.verdict)
    if report.lambda0 is not None:
        if report.lambda0.real:
            table.add_row("lambda0", f"{report.lambda0.p} + {report.lambda0.q}*sqrt({report.lambda0.d})"
                          f"  ~ {report.lambda0.decimal}")
        else:
            table.add_row("lambda0", f"non-real (3b1 + 4b2^2 = {report.lambda0.d})")
    if report.g_lambda0 is not None:
        table.add_row("g(lambda0)", f"{report.g_lambda0.p} + {report.g_lambda0.q}*sqrt({report.g_lambda0.d})"
                      f"  ~ {report.g_lambda0.decimal}")
    if report.a3_sq_over_4 is not None:
        table.add_row("a3^2/4", report.a3_sq_over_4)
    if report.case is not None:
        table.add_row("case", f"{report.case.id}: {report.case.description}")
    if report.certificate is not None:
        rows = ["[" + ", ".join(e.decimal for e in row) + "]" for row in report.certificate]
        table.add_row("certificate", "\n".join(rows))
    if report.witnesses is not None:
        table.add_row("f > 0 at", "(" + ", ".join(report.witnesses.positive) + ")")
        table.add_row("f < 0 at", "(" + ", ".join(report.witnesses.negative) + ")")
    if report.classical is not None:
        table.add_row("classical pd", str(report.classical.pd))
    if report.oracle is not None:
        table.add_row("circle min", f"{report.oracle.circle_min:.6g}")
    flags = report.agreement.model_dump()
    table.add_row("agreement", ", ".join(f"{k}={v}" for k, v in flags.items() if v is not None) or "-")
    for line in report.diagnostics:
        table.add_row("diagnostic", f"[red]{line}[/red]")
    console.print(table)


@click.command(
    context_settings={"ignore_unknown_options": True, "help_option_names": ["-h", "--help"]},
)
@click.option("--json", "as_json", is_flag=True, help="Write the JSON report to stdout.")
@click.option(
    "--batch", "batch_file", type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Decide one quartic per line of FILE and write JSON lines.",
)
@click.option("--no-crosscheck", is_flag=True, help="Skip the classical criterion and the circle oracle.")
@click.option("--precision", type=click.IntRange(min=1, max=200), default=None,
              help="Significant digits of decimal renderings.")
@click.option("--case/--no-case", "include_case", default=True, help="Include the nine-case classification.")
@click.option("--samples", type=click.IntRange(min=8), default=None, help="Circle oracle sample count.")
@click.option(
    "--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
    help="Logging level (default from QUARTIC_LOG_LEVEL).",
)
@click.option("--verbose", is_flag=True, help="Shortcut for --log-level DEBUG.")
@click.argument("coefficients", nargs=-1, type=click.UNPROCESSED)
def cli(as_json, batch_file, no_crosscheck, precision, include_case, samples, log_level, verbose, coefficients):
    """quartic-certify [FLAGS] e4 e3 e2 e1 e0

    Decide the definiteness of e4·x⁴ + e3·x³y + e2·x²y² + e1·xy³ + e0·y⁴.
    Coefficients are integers, "p/q" fractions or finite decimals.
    """
    env = EnvConfig()
    setup_logging("DEBUG" if verbose else (log_level or env.get("log_level")))
    options = CertifyOptions.from_settings(
        env.settings,
        crosscheck=False if no_crosscheck else None,
        include_case=include_case,
        precision=precision,
        samples=samples,
    )
    controller = CertifyController(options)

    if batch_file is not None:
        if coefficients:
            raise click.UsageError("--batch takes no coefficient arguments")
        lines = batch_file.read_text(encoding="utf-8").splitlines()
        records, summary = controller.certify_batch(lines)
        for record in records:
            click.echo(_dump(record))
        click.echo(_dump(summary))
        return summary.exit_code

    try:
        report = controller.certify_tokens(list(coefficients))
    except CoefficientParseError as exc:
        click.echo(f"quartic-certify: {exc}", err=True)
        return EXIT_PARSE_ERROR

    if as_json:
        click.echo(_dump(report))
    else:
        _print_summary(report)
    return report.exit_code


def run(argv=None) -> int:
    """Invoke the CLI and return its exit code instead of exiting."""
    try:
        result = cli.main(args=argv, prog_name="quartic-certify", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_PARSE_ERROR
    except ValidationError as exc:
        click.echo(f"quartic-certify: invalid settings: {exc}", err=True)
        return EXIT_PARSE_ERROR
    return result if isinstance(result, int) else 0


def entrypoint() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entrypoint()
