import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from evpkit.core.exceptions import BoundViolation, NonpositiveScale
from evpkit.numeric import to_rational
from evpkit.principle.ekeland import EkelandCertificate, ekeland_point
from evpkit.principle.relation import decompose
from evpkit.space import Instance, check_scale

logger = logging.getLogger(__name__)


def is_approx_solution(inst: Instance, x: int, eps: Any) -> bool:
    """(f(x) - eps D - K) does not meet f(X)."""
    eps = check_scale(eps)
    inst.space.check_index(x)
    y = inst.scalarizer
    for z in range(inst.size):
        difference = inst.f(x) - inst.f(z)
        # <y*, eps delta + k> >= eps, so a smaller scalarized gap cannot decompose.
        if y(difference) < eps:
            continue
        if decompose(inst, difference, eps) is not None:
            logger.debug("%s is not %s-approximate: f(%s) lies below", inst.labels[x], eps, inst.labels[z])
            return False
    return True


@dataclass(frozen=True)
class BoundReport:
    point: int
    x_bar: int
    eps: Fraction
    lam: Fraction
    distance: Fraction
    approximate: bool

    @property
    def holds(self) -> bool | None:
        """d(x, x_bar) < lam when x is eps*lam-approximate; None when the bound does not apply."""
        if not self.approximate:
            return None
        return self.distance < self.lam


def ekeland_with_bound(inst: Instance, x: int, eps: Any, lam: Any) -> tuple[EkelandCertificate, BoundReport]:
    eps = check_scale(eps)
    lam = to_rational(lam)
    if lam <= 0:
        raise NonpositiveScale(f"lambda must be positive, got {lam}")

    cert = ekeland_point(inst, x, eps)
    report = BoundReport(
        point=x,
        x_bar=cert.x_bar,
        eps=eps,
        lam=lam,
        distance=inst.distance(x, cert.x_bar),
        approximate=is_approx_solution(inst, x, eps * lam),
    )
    if report.holds is False:
        raise BoundViolation(
            f"{inst.labels[x]} is {eps * lam}-approximate but d(x, x_bar) = {report.distance} is not below {lam}"
        )
    return cert, report
