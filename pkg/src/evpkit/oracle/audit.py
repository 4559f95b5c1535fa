"""Independent audit of an Ekeland certificate.

Nothing here calls the simplex: witnesses are checked by exact substitution, and the
claims they do not cover are decided again by elimination.
"""

import logging

from evpkit.core.exceptions import TooLarge
from evpkit.oracle.scan import fm_relation, related_targets
from evpkit.principle import EkelandCertificate
from evpkit.schemas.report import AuditReport
from evpkit.space import Instance

logger = logging.getLogger(__name__)


def _structure_problems(inst: Instance, cert: EkelandCertificate) -> list[str]:
    problems = []
    for name, index in [("start", cert.start), ("x_bar", cert.x_bar)] + [
        (f"chain[{i}]", step.point) for i, step in enumerate(cert.chain)
    ]:
        if not 0 <= index < inst.size:
            problems.append(f"{name} = {index} is outside 0..{inst.size - 1}")
    if cert.scale <= 0:
        problems.append(f"scale {cert.scale} is not positive")
    if cert.points[-1] != cert.x_bar:
        problems.append(f"chain ends at {cert.points[-1]}, not at x_bar = {cert.x_bar}")
    if len(set(cert.points)) != len(cert.points):
        problems.append("chain revisits a point")
    if len(cert.scalar_trace) != len(cert.points):
        problems.append(f"scalar trace has {len(cert.scalar_trace)} entries for {len(cert.points)} points")
    return problems


def _chain_problems(inst: Instance, cert: EkelandCertificate) -> list[str]:
    problems = []
    points = cert.points
    for i, step in enumerate(cert.chain):
        for issue in step.witness.problems(inst, points[i], step.point, cert.scale):
            problems.append(f"step {i} ({inst.labels[points[i]]} -> {inst.labels[step.point]}): {issue}")
    return problems


def _trace_problems(inst: Instance, cert: EkelandCertificate) -> list[str]:
    problems = []
    y = cert.scalarizer
    points = cert.points
    for i, (point, value) in enumerate(zip(points, cert.scalar_trace)):
        if y(inst.f(point)) != value:
            problems.append(f"trace[{i}] = {value}, but <y*, f({inst.labels[point]})> = {y(inst.f(point))}")
    for i in range(1, len(points)):
        drop = cert.scalar_trace[i - 1] - cert.scalar_trace[i]
        needed = cert.scale * inst.distance(points[i - 1], points[i])
        if drop <= 0 or drop < needed:
            problems.append(f"trace drops by {drop} at step {i - 1}, needs more than 0 and at least {needed}")
    return problems


def _inclusion_problems(inst: Instance, cert: EkelandCertificate) -> list[str]:
    issues = cert.inclusion_witness.problems(inst, cert.start, cert.x_bar, cert.scale)
    problems = [f"witness: {issue}" for issue in issues]
    if not fm_relation(inst, cert.start, cert.x_bar, cert.scale):
        problems.append("elimination finds f(start) - f(x_bar) outside scale * d * D + K")
    return problems


def _maximality_problems(inst: Instance, cert: EkelandCertificate) -> list[str]:
    return [
        f"x_bar r {inst.labels[z]}" for z in related_targets(inst, cert.x_bar, cert.scale)
    ]


def audit(inst: Instance, cert: EkelandCertificate) -> AuditReport:
    """Recheck every claim of the certificate; the report passes only if each check does."""
    report = AuditReport()
    structure = _structure_problems(inst, cert)
    if cert.scalarizer.y_star.dim != inst.dim:
        structure.append(f"y* has dimension {cert.scalarizer.y_star.dim}, instance has {inst.dim}")
    report.record("structure", structure)
    if structure:
        logger.warning("certificate structure is broken, skipping the remaining checks")
        return report

    report.record("scalarizer", cert.scalarizer.violations(inst.cone, inst.dset))
    report.record("chain_witnesses", _chain_problems(inst, cert))
    report.record("scalar_trace", _trace_problems(inst, cert))
    try:
        report.record("inclusion", _inclusion_problems(inst, cert))
        report.record("maximality", _maximality_problems(inst, cert))
    except TooLarge as exc:
        report.record("elimination", [exc.detail])

    logger.info("audit %s: %s", "passed" if report.overall else "failed", ", ".join(report.failed()) or "all checks")
    return report
