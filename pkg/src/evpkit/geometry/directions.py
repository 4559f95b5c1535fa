import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from evpkit.core.exceptions import DimensionMismatch, NoSeparation
from evpkit.geometry.cone import PolyhedralCone, check_same_dimension
from evpkit.numeric import NormTag, OutcomeStatus, RationalVector, SystemBuilder, lp_minimize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DirectionSet:
    """D = conv(vertices).

    A polytope is closed, bounded and semi-complete, so of the hypotheses on D only
    D subset of K and 0 not in D + K need checking; `space.validate` certifies both.
    """

    vertices: tuple[RationalVector, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise DimensionMismatch("a direction set needs at least one vertex")
        dim = self.vertices[0].dim
        for i, vertex in enumerate(self.vertices):
            if vertex.dim != dim:
                raise DimensionMismatch(f"vertex {i} has dimension {vertex.dim}, expected {dim}")

    @classmethod
    def parse(cls, vertices: Iterable[Iterable[object]]) -> "DirectionSet":
        return cls(tuple(RationalVector.parse(v) for v in vertices))

    @classmethod
    def singleton(cls, k0: RationalVector) -> "DirectionSet":
        """The classical single-direction case D = {k0}."""
        return cls((k0,))

    @property
    def dim(self) -> int:
        return self.vertices[0].dim

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Scalarizer:
    """Linear functional y* with <y*, g> >= 0 on K and <y*, d> >= 1 on D."""

    y_star: RationalVector

    def __call__(self, value: RationalVector) -> Fraction:
        return self.y_star.dot(value)

    def violations(self, cone: PolyhedralCone, dset: DirectionSet) -> list[str]:
        issues = []
        for j, g in enumerate(cone.generators):
            if self.y_star.dot(g) < 0:
                issues.append(f"<y*, g{j}> = {self.y_star.dot(g)} < 0")
        for i, d in enumerate(dset.vertices):
            if self.y_star.dot(d) < 1:
                issues.append(f"<y*, d{i}> = {self.y_star.dot(d)} < 1")
        return issues


def _add_absolute_bounds(builder: SystemBuilder, free: list[int]) -> list[int]:
    """Add s_c >= |x_c| for every listed free variable and return the s variables."""
    bounds = []
    for x in free:
        s = builder.add_variable()
        builder.add_ge({s: 1, x: -1}, 0)
        builder.add_ge({s: 1, x: 1}, 0)
        bounds.append(s)
    return bounds


def separating_functional(cone: PolyhedralCone, dset: DirectionSet) -> Scalarizer:
    """y* separating 0 from D + K, normalized to <y*, d> >= 1 on D.

    Among all valid functionals the one of least l1 norm is returned, which keeps the
    output canonical for fixed input.
    """
    check_same_dimension(cone, dset.vertices, "vertex")

    builder = SystemBuilder()
    y = builder.add_variables(cone.dim, nonnegative=False)
    t = _add_absolute_bounds(builder, y)
    for g in cone.generators:
        builder.add_ge({y[c]: g[c] for c in range(cone.dim)}, 0)
    for d in dset.vertices:
        builder.add_ge({y[c]: d[c] for c in range(cone.dim)}, 1)
    builder.minimize({s: 1 for s in t})

    outcome = lp_minimize(builder.build())
    if outcome.status is not OutcomeStatus.OPTIMAL or outcome.witness is None:
        raise NoSeparation("0 lies in D + K, no functional separates them")

    scalarizer = Scalarizer(RationalVector(tuple(outcome.witness[j] for j in y)))
    logger.debug("separating functional y* = %s", scalarizer.y_star)
    return scalarizer


def gap(
    cone: PolyhedralCone,
    vertices: DirectionSet | Sequence[RationalVector],
    norm: NormTag | str = NormTag.INF,
) -> Fraction:
    """Exact distance d(D + K, 0) = min ||d + k|| over d in conv(vertices), k in K.

    `vertices` need not satisfy the DirectionSet invariants; this is how they get checked.
    """
    points = vertices.vertices if isinstance(vertices, DirectionSet) else tuple(vertices)
    check_same_dimension(cone, points, "vertex")
    norm = NormTag(norm)
    m = cone.dim

    builder = SystemBuilder()
    lam = builder.add_variables(len(points))
    mu = builder.add_variables(len(cone.generators))
    z = builder.add_variables(m, nonnegative=False)
    for c in range(m):
        row = {z[c]: Fraction(1)}
        for i, d in enumerate(points):
            row[lam[i]] = -d[c]
        for j, g in enumerate(cone.generators):
            row[mu[j]] = -g[c]
        builder.add_eq(row, 0)
    builder.add_eq({a: 1 for a in lam}, 1)

    if norm is NormTag.INF:
        t = builder.add_variable()
        for c in range(m):
            builder.add_ge({t: 1, z[c]: -1}, 0)
            builder.add_ge({t: 1, z[c]: 1}, 0)
        builder.minimize({t: 1})
    else:
        builder.minimize({s: 1 for s in _add_absolute_bounds(builder, z)})

    outcome = lp_minimize(builder.build())
    if outcome.value is None:
        raise ArithmeticError(f"distance program ended {outcome.status.value}")
    return outcome.value
