"""Checkable side conditions under which d(D + K, 0) > 0 is easy to establish."""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from evpkit.core.config import settings
from evpkit.core.exceptions import DimensionMismatch, InputException, NonpositiveAlpha
from evpkit.geometry.cone import PolyhedralCone
from evpkit.numeric import NormTag, RationalVector, combine, to_rational

logger = logging.getLogger(__name__)


def bishop_phelps_contains(
    phi: RationalVector,
    alpha: Fraction | str | int,
    cone: PolyhedralCone,
    norm: NormTag | str = NormTag.INF,
) -> bool:
    """Whether K lies in the Bishop-Phelps cone {z : phi(z) >= alpha ||z||}.

    Checking generators suffices: phi is linear and the norm is subadditive, so the
    inequality passes to nonnegative combinations.
    """
    alpha = to_rational(alpha)
    if alpha <= 0:
        raise NonpositiveAlpha(f"alpha must be positive, got {alpha}")
    if phi.dim != cone.dim:
        raise DimensionMismatch(f"phi has dimension {phi.dim}, cone has {cone.dim}")
    return all(phi.dot(g) >= alpha * g.norm(norm) for g in cone.generators)


class RolewiczOutcome(str, Enum):
    PROVEN_FOR_ORTHANT = "proven_for_orthant"
    FALSIFIED = "falsified"
    NOT_FALSIFIED = "not_falsified"


@dataclass(frozen=True)
class RolewiczVerdict:
    outcome: RolewiczOutcome
    u: RationalVector | None = None
    v: RationalVector | None = None


def _random_point(rng: random.Random, dim: int) -> RationalVector:
    return RationalVector(tuple(Fraction(rng.randint(0, 6), rng.randint(1, 4)) for _ in range(dim)))


def rolewicz_check(
    cone: PolyhedralCone,
    norm: NormTag | str = NormTag.INF,
    trials: int | None = None,
    seed: int | None = None,
) -> RolewiczVerdict:
    """Probe the monotonicity "u - v in K implies ||v|| <= ||u||" on the nonnegative orthant.

    Cones inside the orthant are settled at once, since both norms are monotone there.
    Otherwise every generator g is tried as the pair (g+, g-) before `trials` seeded random
    probes v >= 0, u = v + k.
    """
    trials = settings.ROLEWICZ_TRIALS if trials is None else trials
    seed = settings.ROLEWICZ_SEED if seed is None else seed
    if trials < 1:
        raise InputException(f"trials must be positive, got {trials}")
    norm = NormTag(norm)

    if cone.is_in_orthant():
        return RolewiczVerdict(RolewiczOutcome.PROVEN_FOR_ORTHANT)

    for g in cone.generators:
        u, v = g.positive_part(), g.negative_part()
        if v.norm(norm) > u.norm(norm):
            logger.info("norm is not monotone for K: u=%s, v=%s", u, v)
            return RolewiczVerdict(RolewiczOutcome.FALSIFIED, u, v)

    rng = random.Random(seed)
    for _ in range(trials):
        v = _random_point(rng, cone.dim)
        weights = [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in cone.generators]
        u = v + combine(weights, cone.generators, cone.dim)
        if u.is_nonnegative() and v.norm(norm) > u.norm(norm):
            logger.info("norm is not monotone for K: u=%s, v=%s", u, v)
            return RolewiczVerdict(RolewiczOutcome.FALSIFIED, u, v)

    logger.warning("Rolewicz monotonicity not falsified after %d probes, inconclusive", trials)
    return RolewiczVerdict(RolewiczOutcome.NOT_FALSIFIED)
