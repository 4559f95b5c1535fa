from fractions import Fraction
from pathlib import Path

import click

from evpkit.cli.dependencies import RATIONAL, load_instance, write_csv
from evpkit.cli.instances import INSTANCE_PATH
from evpkit.oracle import scan_maximal
from evpkit.principle import ekeland_with_bound


@click.command("scan")
@click.argument("path", type=INSTANCE_PATH)
@click.option("--scale", type=RATIONAL, default=None, help="Scale of the relation (default: instance epsilon).")
@click.option("--csv", "csv_out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="CSV output.")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes for the pair scan.")
def scan_command(path: Path, scale: Fraction | None, csv_out: Path | None, workers: int | None) -> None:
    """List every point that no other point lies below in the sense of (ii)."""
    inst = load_instance(path)
    maximal = scan_maximal(inst, scale, workers=workers)

    for index in range(inst.size):
        if index in maximal:
            click.echo(inst.labels[index])

    if csv_out is not None:
        y = inst.scalarizer
        write_csv(
            csv_out,
            ["label", "satisfies_ii", "scalarized"],
            ([inst.labels[i], str(i in maximal).lower(), str(y(inst.f(i)))] for i in range(inst.size)),
        )
        click.echo(f"scan written to {csv_out}")


@click.command("approx")
@click.argument("path", type=INSTANCE_PATH)
@click.option("--point", "point_label", required=True, help="Label of the point x.")
@click.option("--eps", type=RATIONAL, required=True, help="epsilon > 0.")
@click.option("--lambda", "lam", type=RATIONAL, required=True, help="lambda > 0.")
def approx_command(path: Path, point_label: str, eps: Fraction, lam: Fraction) -> None:
    """Check the distance bound for an eps*lambda-approximate point."""
    inst = load_instance(path)
    x = inst.space.index_of(point_label)
    cert, report = ekeland_with_bound(inst, x, eps, lam)

    click.echo(f"{point_label} is {eps * lam}-approximate: {str(report.approximate).lower()}")
    click.echo(f"x_bar: {inst.labels[cert.x_bar]}")
    click.echo(f"d(x, x_bar): {report.distance}")
    if report.holds is None:
        click.echo("bound d(x, x_bar) < lambda: not applicable")
    else:
        click.echo(f"bound d(x, x_bar) < {lam}: {'holds' if report.holds else 'violated'}")
