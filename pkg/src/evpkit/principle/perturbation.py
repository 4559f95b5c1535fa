from fractions import Fraction
from typing import Any, Sequence

from evpkit.core.exceptions import InvalidWeights, ParseException
from evpkit.geometry import cone_contains
from evpkit.numeric import RationalVector, combine, to_rational
from evpkit.principle.ekeland import EkelandCertificate
from evpkit.space import Instance, Objective, check_scale


def direction_from_weights(inst: Instance, weights: Sequence[Any]) -> RationalVector:
    """delta = sum w_i d_i for a probability vector w over the vertices of D."""
    try:
        values = tuple(to_rational(w) for w in weights)
    except ParseException as exc:
        raise InvalidWeights(str(exc)) from exc
    if len(values) != len(inst.dset):
        raise InvalidWeights(f"expected {len(inst.dset)} weights, got {len(values)}")
    if any(w < 0 for w in values) or sum(values) != 1:
        raise InvalidWeights("weights must be nonnegative and sum to 1")
    return combine(values, inst.dset.vertices, inst.dim)


def perturbed_objective(inst: Instance, weights: Sequence[Any], x_bar: int, scale: Any = None) -> Objective:
    """z -> f(z) + scale * d(z, x_bar) * delta, with scale defaulting to the instance epsilon."""
    delta = direction_from_weights(inst, weights)
    scale = check_scale(inst.epsilon if scale is None else scale)
    inst.space.check_index(x_bar)
    return Objective(
        tuple(inst.f(z) + delta.scale(scale * inst.distance(z, x_bar)) for z in range(inst.size))
    )


def check_unique_minimal(inst: Instance, cert: EkelandCertificate, weights: Sequence[Any]) -> bool:
    """x_bar is the unique K-minimal point of the perturbed problem: no other value lies below it."""
    perturbed = perturbed_objective(inst, weights, cert.x_bar, cert.scale)
    top: RationalVector = perturbed[cert.x_bar]
    return not any(cone_contains(inst.cone, top - perturbed[z]) for z in range(inst.size) if z != cert.x_bar)


def vertex_weights(inst: Instance, index: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(i == index)) for i in range(len(inst.dset)))
