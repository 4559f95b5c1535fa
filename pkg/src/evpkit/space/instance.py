import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Mapping

from pydantic import ValidationError

from evpkit.core.exceptions import CustomException, DimensionMismatch, InvalidInstance, NonpositiveScale
from evpkit.geometry import DirectionSet, PolyhedralCone, Scalarizer, cone_contains, gap, separating_functional
from evpkit.numeric import NormTag, RationalVector, to_rational
from evpkit.schemas.custom_validators import json_path
from evpkit.schemas.instance import InstanceFile, ValidationReport
from evpkit.space.metric import FiniteMetricSpace, Objective

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    """The full hypothesis block: X, f, K, D and the scale epsilon, certified by `validate`.

    The separating functional y* is computed once during validation and reused by every
    construction on the instance.
    """

    space: FiniteMetricSpace
    objective: Objective
    cone: PolyhedralCone
    dset: DirectionSet
    scalarizer: Scalarizer
    epsilon: Fraction = Fraction(1)

    @property
    def size(self) -> int:
        return len(self.space)

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def f(self, index: int) -> RationalVector:
        self.space.check_index(index)
        return self.objective[index]

    def distance(self, u: int, v: int) -> Fraction:
        return self.space.distance(u, v)

    def with_space(self, space: FiniteMetricSpace) -> "Instance":
        if len(space) != self.size:
            raise DimensionMismatch(f"replacement space has {len(space)} points, instance has {self.size}")
        return replace(self, space=space)

    def to_file(self) -> InstanceFile:
        return InstanceFile(
            dim=self.dim,
            labels=list(self.labels),
            dist=[list(row) for row in self.space.dist],
            f=[list(value.components) for value in self.objective.values],
            cone_generators=[list(g.components) for g in self.cone.generators],
            d_vertices=[list(d.components) for d in self.dset.vertices],
            epsilon=self.epsilon,
        )


def distance(inst: Instance, u: int, v: int) -> Fraction:
    return inst.distance(u, v)


def _check_vectors(report: ValidationReport, key: str, rows: list[list[Fraction]], dim: int) -> bool:
    ok = True
    for i, row in enumerate(rows):
        if len(row) != dim:
            report.add(f"$.{key}[{i}]", f"expected {dim} components, got {len(row)}")
            ok = False
    return ok


def validate(raw: InstanceFile | Mapping[str, Any]) -> Instance | ValidationReport:
    """Certify raw instance data, or report every violated invariant with its JSON path."""
    report = ValidationReport()

    if not isinstance(raw, InstanceFile):
        try:
            raw = InstanceFile.model_validate(raw)
        except ValidationError as exc:
            for error in exc.errors():
                report.add(json_path(tuple(error["loc"])), error["msg"])
            return report

    n = len(raw.labels)
    m = raw.dim

    seen: dict[str, int] = {}
    for i, label in enumerate(raw.labels):
        if label in seen:
            report.add(f"$.labels[{i}]", f"duplicate label {label!r} (first at index {seen[label]})")
        seen.setdefault(label, i)

    dist_ok = len(raw.dist) == n and all(len(row) == n for row in raw.dist)
    if not dist_ok:
        report.add("$.dist", f"distance matrix must be {n}x{n} to match the labels")
    else:
        space = FiniteMetricSpace.parse(raw.labels, raw.dist)
        for path, message in space.metric_violations():
            report.add(path, message)

    if len(raw.f) != n:
        report.add("$.f", f"objective has {len(raw.f)} rows, expected one per label ({n})")
    f_ok = _check_vectors(report, "f", raw.f, m) and len(raw.f) == n

    cone_ok = _check_vectors(report, "cone_generators", raw.cone_generators, m)
    for j, g in enumerate(raw.cone_generators):
        if all(a == 0 for a in g):
            report.add(f"$.cone_generators[{j}]", "cone generators must be nonzero")
            cone_ok = False
    d_ok = _check_vectors(report, "d_vertices", raw.d_vertices, m)

    if raw.epsilon <= 0:
        report.add("$.epsilon", f"epsilon must be positive, got {raw.epsilon}")

    cone: PolyhedralCone | None = None
    dset: DirectionSet | None = None
    scalarizer: Scalarizer | None = None
    if cone_ok and d_ok:
        cone = PolyhedralCone.parse(raw.cone_generators)
        dset = DirectionSet.parse(raw.d_vertices)
        for i, vertex in enumerate(dset.vertices):
            if not cone_contains(cone, vertex):
                report.add(f"$.d_vertices[{i}]", f"vertex {vertex} does not lie in K")
        distance_to_origin = gap(cone, dset, NormTag.INF)
        if distance_to_origin == 0:
            report.add("$.d_vertices", "0 is not outside cl(D+K): gap(K, D) = 0")
        else:
            scalarizer = separating_functional(cone, dset)

    if not report.ok or not (dist_ok and f_ok) or cone is None or dset is None or scalarizer is None:
        logger.warning("instance rejected with %d issue(s)", len(report.issues))
        return report

    return Instance(
        space=FiniteMetricSpace.parse(raw.labels, raw.dist),
        objective=Objective.parse(raw.f),
        cone=cone,
        dset=dset,
        scalarizer=scalarizer,
        epsilon=raw.epsilon,
    )


def require_valid(raw: InstanceFile | Mapping[str, Any]) -> Instance:
    result = validate(raw)
    if isinstance(result, ValidationReport):
        raise InvalidInstance(result)
    return result


def build_instance(
    labels: list[str],
    dist: list[list[Any]],
    f: list[list[Any]],
    cone_generators: list[list[Any]],
    d_vertices: list[list[Any]],
    epsilon: Any = 1,
) -> Instance:
    """Validate an instance given as Python values (ints, Fractions or rational strings)."""
    try:
        dim = len(cone_generators[0])
        raw = InstanceFile(
            dim=dim,
            labels=labels,
            dist=[[to_rational(a) for a in row] for row in dist],
            f=[[to_rational(a) for a in row] for row in f],
            cone_generators=[[to_rational(a) for a in row] for row in cone_generators],
            d_vertices=[[to_rational(a) for a in row] for row in d_vertices],
            epsilon=to_rational(epsilon),
        )
    except (IndexError, CustomException, ValidationError) as exc:
        raise InvalidInstance(ValidationReport(), f"malformed instance data: {exc}") from exc
    return require_valid(raw)


def check_scale(scale: Any) -> Fraction:
    scale = to_rational(scale)
    if scale <= 0:
        raise NonpositiveScale(f"scale must be positive, got {scale}")
    return scale
