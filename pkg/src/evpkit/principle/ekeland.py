import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from evpkit.core.exceptions import DimensionMismatch
from evpkit.geometry import Scalarizer
from evpkit.principle.relation import RelationWitness, may_relate, relation_matrix, relation_r
from evpkit.relations import find_maximal
from evpkit.space import Instance, check_scale

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainStep:
    """Move to `point`; `witness` proves (previous point) r point."""

    point: int
    witness: RelationWitness


@dataclass(frozen=True)
class EkelandCertificate:
    start: int
    chain: tuple[ChainStep, ...]
    x_bar: int
    scalarizer: Scalarizer
    scalar_trace: tuple[Fraction, ...]
    scale: Fraction
    inclusion_witness: RelationWitness

    @property
    def points(self) -> tuple[int, ...]:
        return (self.start,) + tuple(step.point for step in self.chain)


def _resolve_scale(inst: Instance, scale: Any) -> Fraction:
    return check_scale(inst.epsilon if scale is None else scale)


def ekeland_point(inst: Instance, x: int, scale: Any = None) -> EkelandCertificate:
    """Follow r from x by steepest scalarized descent until no strict successor is left.

    Every step lowers <y*, f> by at least scale * d, so no point repeats and the chain has at
    most |X| - 1 steps. The end point x_bar satisfies (i) x r x_bar, by transitivity of r, and
    (ii) not x_bar r z for every z != x_bar. `scale` defaults to the instance epsilon.
    """
    scale = _resolve_scale(inst, scale)
    inst.space.check_index(x)
    y = inst.scalarizer

    current = x
    chain: list[ChainStep] = []
    trace = [y(inst.f(x))]
    while True:
        best: tuple[Fraction, int, RelationWitness] | None = None
        for z in range(inst.size):
            if z == current or not may_relate(inst, current, z, scale):
                continue
            witness = relation_r(inst, current, z, scale)
            if witness is None:
                continue
            descent = y(inst.f(current)) - y(inst.f(z))
            if best is None or descent > best[0]:
                best = (descent, z, witness)
        if best is None:
            break

        descent, current, witness = best
        chain.append(ChainStep(current, witness))
        trace.append(y(inst.f(current)))
        logger.info("step %d: -> %s (descent %s)", len(chain), inst.labels[current], descent)

    inclusion = relation_r(inst, x, current, scale)
    if inclusion is None:
        raise ArithmeticError(f"start {x} is not related to the end of its own chain {current}")

    return EkelandCertificate(
        start=x,
        chain=tuple(chain),
        x_bar=current,
        scalarizer=y,
        scalar_trace=tuple(trace),
        scale=scale,
        inclusion_witness=inclusion,
    )


def maximal_via_relation(inst: Instance, x: int, scale: Any = None) -> int:
    """An r-maximal point reachable from x, found on the tabulated relation r.

    Since r is transitive and u r v, u != v forces strict descent of <y*, f>, r-maximality
    is the same as conclusion (ii).
    """
    scale = _resolve_scale(inst, scale)
    return find_maximal(relation_matrix(inst, scale), x)


def scalar_reduction_holds(inst: Instance, x_bar: int, scale: Any = None) -> bool:
    """f(z) + scale * e * d(z, x_bar) > f(x_bar) for all z != x_bar, with D = {e}, K = [0, oo).

    For e = 1 this is the inequality of the classical (scalar) Ekeland principle.
    """
    scale = _resolve_scale(inst, scale)
    if inst.dim != 1 or len(inst.dset) != 1 or not all(g[0] > 0 for g in inst.cone.generators):
        raise DimensionMismatch("the scalar reduction needs m = 1, K = [0, oo) and a single direction")
    inst.space.check_index(x_bar)
    e = inst.dset.vertices[0][0]
    fx = inst.f(x_bar)[0]
    return all(
        inst.f(z)[0] + scale * e * inst.distance(z, x_bar) > fx for z in range(inst.size) if z != x_bar
    )
