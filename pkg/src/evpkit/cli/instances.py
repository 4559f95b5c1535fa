from fractions import Fraction
from pathlib import Path

import click

from evpkit.cli.dependencies import RATIONAL, VECTOR, load_instance, load_instance_file
from evpkit.core.exceptions import EXIT_SEMANTIC_FAILURE
from evpkit.geometry import bishop_phelps_contains, gap, rolewicz_check
from evpkit.numeric import NormTag, RationalVector
from evpkit.schemas.instance import ValidationReport
from evpkit.space import validate

INSTANCE_PATH = click.Path(exists=True, dir_okay=False, path_type=Path)


@click.command("validate")
@click.argument("path", type=INSTANCE_PATH)
@click.pass_context
def validate_command(ctx: click.Context, path: Path) -> None:
    """Check an instance file and list every violated hypothesis with its JSON path."""
    result = validate(load_instance_file(path))
    if isinstance(result, ValidationReport):
        click.echo(f"{path}: invalid, {len(result.issues)} issue(s)")
        for issue in result.issues:
            click.echo(f"  {issue.path}: {issue.message}")
        ctx.exit(EXIT_SEMANTIC_FAILURE)

    click.echo(f"{path}: valid")
    click.echo(f"  points:     {result.size}")
    click.echo(f"  dimension:  {result.dim}")
    click.echo(f"  epsilon:    {result.epsilon}")
    click.echo(f"  y*:         {result.scalarizer.y_star}")


@click.command("analyze")
@click.argument("path", type=INSTANCE_PATH)
@click.option("--phi", type=VECTOR, default=None, help="Functional of a Bishop-Phelps cone, e.g. 1,1.")
@click.option("--alpha", type=RATIONAL, default=None, help="Bishop-Phelps slope, must be positive.")
@click.option("--norm", type=click.Choice([tag.value for tag in NormTag]), default=NormTag.INF.value, show_default=True)
@click.option("--trials", type=int, default=None, help="Random Rolewicz probes (default from settings).")
@click.option("--seed", type=int, default=None, help="Seed of the Rolewicz probes (default from settings).")
def analyze_command(
    path: Path,
    phi: RationalVector | None,
    alpha: Fraction | None,
    norm: str,
    trials: int | None,
    seed: int | None,
) -> None:
    """Report the geometry of K and D: gap, separating functional and cone conditions."""
    if (phi is None) != (alpha is None):
        raise click.UsageError("--phi and --alpha must be given together")

    inst = load_instance(path)
    tag = NormTag(norm)
    click.echo(f"gap d(D+K, 0) [{tag.value}]: {gap(inst.cone, inst.dset, tag)}")
    click.echo(f"y*: {inst.scalarizer.y_star}")
    if phi is not None and alpha is not None:
        verdict = bishop_phelps_contains(phi, alpha, inst.cone, tag)
        click.echo(f"Bishop-Phelps cone (phi={phi}, alpha={alpha}) contains K: {str(verdict).lower()}")

    rolewicz = rolewicz_check(inst.cone, tag, trials=trials, seed=seed)
    line = f"Rolewicz monotonicity: {rolewicz.outcome.value}"
    if rolewicz.u is not None:
        line += f" (u={rolewicz.u}, v={rolewicz.v})"
    click.echo(line)
