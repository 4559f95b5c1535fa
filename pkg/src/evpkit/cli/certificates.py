import logging
from fractions import Fraction
from pathlib import Path

import click

from evpkit.cli.dependencies import RATIONAL, load_certificate, load_instance, write_csv, write_model
from evpkit.cli.instances import INSTANCE_PATH
from evpkit.core.exceptions import EXIT_SEMANTIC_FAILURE
from evpkit.oracle import audit
from evpkit.principle import ekeland_point
from evpkit.schemas.certificate import CertificateFile

logger = logging.getLogger(__name__)


@click.command("solve")
@click.argument("path", type=INSTANCE_PATH)
@click.option("--start", "start_label", default=None, help="Label of the starting point (default: the first).")
@click.option("--scale", type=RATIONAL, default=None, help="Scale of the perturbation (default: instance epsilon).")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Certificate JSON output.")
@click.option("--trace-csv", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Chain as CSV.")
def solve_command(
    path: Path,
    start_label: str | None,
    scale: Fraction | None,
    out: Path | None,
    trace_csv: Path | None,
) -> None:
    """Construct x_bar from the start point and print its certificate summary."""
    inst = load_instance(path)
    start = 0 if start_label is None else inst.space.index_of(start_label)
    cert = ekeland_point(inst, start, scale)

    click.echo(f"start:        {inst.labels[cert.start]}")
    click.echo(f"x_bar:        {inst.labels[cert.x_bar]}")
    click.echo(f"chain length: {len(cert.chain)}")
    click.echo(f"d(start, x_bar): {inst.distance(cert.start, cert.x_bar)}")
    click.echo("<y*, f> trace: " + " > ".join(str(value) for value in cert.scalar_trace))

    if out is not None:
        write_model(out, CertificateFile.from_certificate(cert))
        click.echo(f"certificate written to {out}")
    if trace_csv is not None:
        write_csv(
            trace_csv,
            ["step", "label", "scalarized", "distance_from_start"],
            (
                [step, inst.labels[point], str(value), str(inst.distance(cert.start, point))]
                for step, (point, value) in enumerate(zip(cert.points, cert.scalar_trace))
            ),
        )
        click.echo(f"trace written to {trace_csv}")


@click.command("verify")
@click.argument("path", type=INSTANCE_PATH)
@click.argument("certificate", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_context
def verify_command(ctx: click.Context, path: Path, certificate: Path) -> None:
    """Audit a certificate against its instance without trusting the solver."""
    inst = load_instance(path)
    cert = load_certificate(certificate, inst)
    report = audit(inst, cert)

    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        click.echo(f"[{status}] {check.name}" + (f": {check.detail}" if check.detail else ""))
    click.echo(f"overall: {'pass' if report.overall else 'FAIL'}")
    if not report.overall:
        ctx.exit(EXIT_SEMANTIC_FAILURE)
