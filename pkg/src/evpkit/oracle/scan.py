import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any

from evpkit.core.config import settings
from evpkit.numeric import Feasibility, LinearSystem
from evpkit.oracle.fourier_motzkin import fm_feasible
from evpkit.space import Instance, check_scale

logger = logging.getLogger(__name__)


def relation_system(inst: Instance, u: int, v: int, scale: Fraction) -> LinearSystem:
    """Membership of f(u) - f(v) in scale * d(u, v) * D + K over variables (lam, mu) >= 0.

    Rows: one per coordinate of the objective space, then sum(lam) = 1.
    """
    coefficient = scale * inst.distance(u, v)
    difference = inst.f(u) - inst.f(v)
    vertices, generators = inst.dset.vertices, inst.cone.generators

    rows = [
        [coefficient * d[i] for d in vertices] + [g[i] for g in generators]
        for i in range(inst.dim)
    ]
    rows.append([Fraction(1)] * len(vertices) + [Fraction(0)] * len(generators))
    rhs = list(difference) + [Fraction(1)]
    return LinearSystem.from_lists(rows, rhs, [True] * (len(vertices) + len(generators)))


def fm_relation(inst: Instance, u: int, v: int, scale: Any = None, budget: int | None = None) -> Feasibility:
    scale = check_scale(inst.epsilon if scale is None else scale)
    return fm_feasible(relation_system(inst, u, v, scale), budget)


def _prefilter_ok(inst: Instance) -> bool:
    # y* is trusted only after its invariants are rechecked here by plain arithmetic.
    return not inst.scalarizer.violations(inst.cone, inst.dset)


def related_targets(inst: Instance, u: int, scale: Fraction, budget: int | None = None) -> list[int]:
    """Every z != u with u r z, decided by elimination."""
    y = inst.scalarizer if _prefilter_ok(inst) else None
    targets = []
    for z in range(inst.size):
        if z == u:
            continue
        # u r z forces <y*, f(u) - f(z)> >= scale * d(u, z).
        if y is not None and y(inst.f(u) - inst.f(z)) < scale * inst.distance(u, z):
            continue
        if fm_relation(inst, u, z, scale, budget):
            targets.append(z)
    return targets


def _satisfies_ii(args: tuple[Instance, int, Fraction, int | None]) -> tuple[int, bool]:
    inst, candidate, scale, budget = args
    return candidate, not related_targets(inst, candidate, scale, budget)


def scan_maximal(
    inst: Instance,
    scale: Any = None,
    workers: int | None = None,
    budget: int | None = None,
) -> set[int]:
    """All points x with not x r z for every z != x, checked pair by pair with elimination."""
    scale = check_scale(inst.epsilon if scale is None else scale)
    workers = settings.SCAN_WORKERS if workers is None else workers
    jobs = [(inst, candidate, scale, budget) for candidate in range(inst.size)]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_satisfies_ii, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_satisfies_ii(job) for job in jobs]

    maximal = {candidate for candidate, ok in results if ok}
    logger.info("scan: %d of %d points satisfy (ii) at scale %s", len(maximal), inst.size, scale)
    return maximal
