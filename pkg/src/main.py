import functools
import json
import logging
import sys
from typing import Any, Callable, Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from .atlas.builder import AtlasBuilder
from .classify.classifier import classify
from .config.config import Config, OutputConfig
from .engine.oracles import is_ap
from .exceptions.custom_exceptions import (
    AlgPosError,
    ConfigurationError,
    ValidationError,
)
from .exporters.report_exporter import ReportExporter
from .graphs.digraph import digraph_of, strongly_connected
from .models.enums import ReportFormat, SubclassOutcome, Verdict
from .models.matrix import RealMatrix
from .models.pattern import SignPattern
from .patterns.algebra import row_col_necessary, theorem4_excludes, uniform_offdiag
from .patterns.subclass import subclass_check

logger = logging.getLogger(__name__)

EXIT_AP, EXIT_NOT_AP, EXIT_BORDERLINE = 0, 1, 2
EXIT_USAGE, EXIT_SOFTWARE, EXIT_IO, EXIT_CONFIG = 64, 70, 74, 78

VERIFY_MATCH_RATE = 0.95

def setup_logging(output: OutputConfig) -> None:
    handlers = [logging.StreamHandler(sys.stderr)]
    if output.log_file:
        handlers.append(logging.FileHandler(output.log_file))
    logging.basicConfig(
        level=getattr(logging, output.log_level, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )

def _stdout() -> Console:
    return Console(highlight=False)

def _stderr() -> Console:
    return Console(stderr=True, highlight=False)

def exit_codes(func: Callable) -> Callable:
    """Map library exceptions onto process exit codes"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValidationError as e:
            _stderr().print(f"Invalid input: {escape(str(e))}")
            sys.exit(EXIT_USAGE)
        except ConfigurationError as e:
            _stderr().print(f"Configuration error: {escape(str(e))}")
            sys.exit(EXIT_CONFIG)
        except OSError as e:
            logger.error(f"I/O error: {e}")
            _stderr().print(f"I/O error: {escape(str(e))}")
            sys.exit(EXIT_IO)
        except AlgPosError as e:
            logger.error(f"Application error: {e}")
            _stderr().print(f"Error: {escape(str(e))}")
            sys.exit(EXIT_SOFTWARE)
    return wrapper

def common_options(func: Callable) -> Callable:
    options = [
        click.option('--seed', type=int, default=None, help='Global sampling seed'),
        click.option('--tol', type=float, default=None, help='Eigen realness and positivity tolerance'),
        click.option('--samples', type=int, default=None, help='Samples per pattern'),
        click.option('--max-degree', type=int, default=None, help='LP polynomial degree (0 means n-1)'),
        click.option('--format', 'report_format', type=click.Choice(['json', 'md']), default=None,
                     help='Report output format'),
        click.option('--out', 'output_directory', type=click.Path(file_okay=False), default=None,
                     help='Output directory for report files'),
    ]
    for option in reversed(options):
        func = option(func)
    return func

def load_config(**flags: Any) -> Config:
    """Environment configuration with CLI flags applied, validated"""
    config = Config().override(**flags)
    errors = config.validate()
    if errors:
        raise ConfigurationError(f"Configuration errors: {errors}")
    setup_logging(config.output)
    return config

# Cell text such as "-+/+-" or "-1 1; 1 -1" starts with '-' and must reach the parsers
INPUT_SETTINGS = {'ignore_unknown_options': True}

class AlgPosGroup(click.Group):
    """Command group whose usage errors exit with EXIT_USAGE instead of click's 2"""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            logger.info("Process interrupted by user")
            _stderr().print("Aborted!")
            sys.exit(EXIT_SOFTWARE)
        if not standalone_mode:
            return rv
        sys.exit(rv if isinstance(rv, int) else 0)

@click.group(cls=AlgPosGroup)
def cli():
    """Algebraic positivity of matrices and sign patterns.

    \b
    Matrix text:   rows separated by ';', entries by spaces or ','   e.g. "1 1; 1 1"
    Pattern text:  rows separated by '/', cells from + - 0           e.g. "0+0/00+/+00"
    """

@cli.command(context_settings=INPUT_SETTINGS)
@click.argument('matrix')
@common_options
@exit_codes
def check(matrix: str, **flags):
    """Decide whether MATRIX is algebraically positive (exit 0 AP, 1 not AP, 2 borderline)"""
    # Validate configuration and input
    config = load_config(**flags)
    A = RealMatrix.from_text(matrix)
    verdict = is_ap(A, config.numerics)

    # Print verdict
    console = _stdout()
    label = 'AP' if verdict.is_ap else 'not AP'
    if verdict.borderline:
        label += ' (borderline)'
    console.print(f"Verdict: {label}")
    console.print(f"Oracles: {verdict.agreement.value}")

    # Print margins
    table = Table(title="Margins")
    table.add_column("margin")
    table.add_column("value", justify="right")
    for name, value in verdict.margins.items():
        table.add_row(name, f"{value:.6g}")
    console.print(table)

    if verdict.eigen is not None:
        console.print(f"Eigen certificate: lambda = {verdict.eigen.pair.value:.6g}, "
                      f"min entry {verdict.eigen.min_entry:.3g}, gap {verdict.eigen.gap:.3g}")
    if verdict.poly is not None:
        k = ', '.join(f"{c:.6g}" for c in verdict.poly.offdiag_coeffs)
        console.print(f"Polynomial certificate: k = [{k}], k0 = {verdict.poly.k0:.6g}, "
                      f"margin {verdict.poly.margin:.3g}")

    # Exit with verdict code
    if verdict.borderline:
        sys.exit(EXIT_BORDERLINE)
    sys.exit(EXIT_AP if verdict.is_ap else EXIT_NOT_AP)

@cli.command(context_settings=INPUT_SETTINGS)
@click.argument('matrix')
@common_options
@exit_codes
def certificate(matrix: str, **flags):
    """Print the eigenpair and polynomial certificates of MATRIX (--format json or md)"""
    config = load_config(**flags)
    verdict = is_ap(RealMatrix.from_text(matrix), config.numerics)
    data = verdict.to_dict()
    if config.output.report_format == ReportFormat.MARKDOWN.value:
        lines = [f"# Certificates ({'AP' if verdict.is_ap else 'not AP'}, {data['agreement']})", ""]
        for name in ('eigen', 'poly'):
            lines.append(f"- {name}: `{json.dumps(data[name])}`")
        click.echo("\n".join(lines))
    else:
        click.echo(json.dumps(data, indent=2))
    sys.exit(EXIT_AP if verdict.eigen is not None or verdict.poly is not None else EXIT_NOT_AP)

@cli.command(name='classify', context_settings=INPUT_SETTINGS)
@click.argument('pattern')
@common_options
@exit_codes
def classify_command(pattern: str, **flags):
    """Classify PATTERN as RAP, AAP or DNA and show the evidence chain"""
    config = load_config(**flags)
    S = SignPattern.from_text(pattern)
    result = classify(S, config, seed=config.sampling.seed)

    # Build evidence chain
    table = Table(title=f"Evidence chain for {S}")
    table.add_column("stage")
    table.add_column("result")
    irreducible = strongly_connected(digraph_of(S))
    table.add_row("irreducible", str(irreducible))
    if irreducible:
        table.add_row("row/column sign test", str(row_col_necessary(S)))
        table.add_row("B_A test excludes", str(theorem4_excludes(S)))
        table.add_row("uniform off-diagonal", str(uniform_offdiag(S)))
    if result.entry_id:
        table.add_row("table entry", result.entry_id)

    console = _stdout()
    console.print(table)
    proof = '' if result.proven else ' (not proven)'
    console.print(f"Verdict: {result.verdict.value} via {result.evidence.kind.value}{proof}")

@cli.command(context_settings=INPUT_SETTINGS)
@click.argument('sub')
@click.argument('sup')
@common_options
@exit_codes
def subclass(sub: str, sup: str, **flags):
    """Decide whether SUB is a scalar-shift subclass of SUP (exit 0 holds, 1 fails, 2 unknown)"""
    config = load_config(**flags)
    B, A = SignPattern.from_text(sub), SignPattern.from_text(sup)
    verdict = subclass_check(B, A, seed=config.sampling.seed, samples=config.sampling.samples,
                             magnitude_profile=(config.sampling.magnitude_low, config.sampling.magnitude_high))

    console = _stdout()
    console.print(f"{B} subclass of {A}: {verdict.outcome.value}")
    if verdict.rule is not None:
        console.print(f"Rule: {verdict.rule.value}")
    if verdict.counterexample is not None:
        console.print(f"Counterexample: {verdict.counterexample.to_text()}", markup=False)

    codes = {SubclassOutcome.HOLDS: 0, SubclassOutcome.FAILS: 1, SubclassOutcome.UNKNOWN: 2}
    sys.exit(codes[verdict.outcome])

@cli.command()
@common_options
@click.option('--timing', is_flag=True, help='Include elapsed time in the reports')
@exit_codes
def atlas(timing: bool, **flags):
    """Enumerate and classify every irreducible 3x3 pattern class and write the reports"""
    config = load_config(**flags)

    # Build and export atlas
    report = AtlasBuilder(config).build()
    exporter = ReportExporter(config.output.output_directory, include_timing=timing)
    written = exporter.export_all(report)

    # Display summary
    table = Table(title="Atlas")
    table.add_column("verdict")
    table.add_column("classes", justify="right")
    for verdict in Verdict:
        table.add_row(verdict.value, str(report.totals.get(verdict.value, 0)))
    console = _stdout()
    console.print(table)
    console.print(f"Digraph groups: {len(report.digraph_groups)}; discrepancies: {len(report.discrepancies)}; "
                  f"table misses: {len(report.table_misses)}")
    for name, path in written.items():
        console.print(f"Wrote {path}", markup=False)

    sys.exit(0 if report.passed else 1)

@cli.command(name='verify-paper')
@common_options
@exit_codes
def verify_paper(**flags):
    """Check every printed witness, condition and recipe of the classification table"""
    config = load_config(**flags)

    # Run verification
    summary, witnesses, harness, discrepancies = AtlasBuilder(config).verify_paper()
    written = ReportExporter(config.output.output_directory).export_verification(
        summary, witnesses, harness, discrepancies)

    console = _stdout()
    console.print(f"Witness match rate: {summary['match_rate']:.1%} "
                  f"({summary['matched']}/{summary['witnesses']})")
    console.print(f"Oracle agreement outside the borderline band: {summary['oracle_agreement']:.1%}")
    for w in witnesses:
        if not w.match:
            console.print(f"  mismatch {w.entry_id} #{w.index}: printed ap={w.expected_ap}, "
                          f"oracle ap={w.observed_ap}", markup=False)
    suspects = [d.entry_id for d in discrepancies if d.kind.value == 'suspect_row']
    console.print(f"Suspect rows: {', '.join(suspects) or 'none'}", markup=False)
    for path in written.values():
        console.print(f"Wrote {path}", markup=False)

    # Determine exit status
    passed = summary['match_rate'] >= VERIFY_MATCH_RATE and summary['oracle_agreement'] == 1.0
    sys.exit(0 if passed else 1)

def main(argv: Optional[list] = None):
    """Console entry point"""
    cli.main(args=argv, prog_name='algpos')

if __name__ == "__main__":
    main()
