import json
from fractions import Fraction
from typing import Any

import pytest

from evpkit.core.exceptions import DimensionMismatch, IndexOutOfRange, InvalidInstance, NonpositiveScale
from evpkit.schemas.instance import InstanceFile, ValidationReport
from evpkit.space import FiniteMetricSpace, Instance, build_instance, check_scale, distance, require_valid, validate
from evpkit.tests.helpers import generators


def flagship_raw() -> dict[str, Any]:
    return json.loads(generators.FLAGSHIP.read_text(encoding="utf-8"))


def paths(report: ValidationReport) -> list[str]:
    return [issue.path for issue in report.issues]


def test_flagship_file_is_valid() -> None:
    inst = validate(flagship_raw())
    assert isinstance(inst, Instance)
    assert inst.size == 3
    assert inst.dim == 2
    assert inst.epsilon == 1
    assert inst.scalarizer.violations(inst.cone, inst.dset) == []


def test_single_point_scalar_instance_is_valid() -> None:
    inst = build_instance(["only"], [[0]], [[7]], [[1]], [[1]])
    assert inst.size == 1


def test_triangle_violation_names_the_triple() -> None:
    raw = flagship_raw()
    raw["dist"] = [["0", "1", "3"], ["1", "0", "1"], ["3", "1", "0"]]
    report = validate(raw)
    assert isinstance(report, ValidationReport)
    assert any(issue.message.startswith("triangle inequality violated at (0,1,2)") for issue in report.issues)
    assert "$.dist[0][2]" in paths(report)


def test_zero_direction_is_reported_as_zero_gap() -> None:
    raw = flagship_raw()
    raw["d_vertices"] = [["0", "0"]]
    report = validate(raw)
    assert isinstance(report, ValidationReport)
    assert "$.d_vertices" in paths(report)


def test_vertex_outside_cone_is_reported() -> None:
    raw = flagship_raw()
    raw["d_vertices"] = [["1", "0"], ["-1", "2"]]
    report = validate(raw)
    assert isinstance(report, ValidationReport)
    assert "$.d_vertices[1]" in paths(report)


def test_binary_floats_are_rejected_with_their_path() -> None:
    raw = flagship_raw()
    raw["f"][1][0] = 1.0
    report = validate(raw)
    assert isinstance(report, ValidationReport)
    assert "$.f[1][0]" in paths(report)


@pytest.mark.parametrize(
    "key, value, path",
    [
        ("labels", ["0", "1", "1"], "$.labels[2]"),
        ("epsilon", "0", "$.epsilon"),
        ("f", [["2", "2"], ["1", "1"]], "$.f"),
        ("cone_generators", [["1", "0", "0"]], "$.cone_generators[0]"),
        ("dist", [["0", "1"], ["1", "0"]], "$.dist"),
    ],
)
def test_shape_and_value_errors(key: str, value: Any, path: str) -> None:
    raw = flagship_raw()
    raw[key] = value
    report = validate(raw)
    assert isinstance(report, ValidationReport)
    assert path in paths(report)


def test_asymmetric_and_nonpositive_distances() -> None:
    raw = flagship_raw()
    raw["dist"] = [["0", "1", "2"], ["2", "0", "0"], ["2", "0", "0"]]
    report = validate(raw)
    assert isinstance(report, ValidationReport)
    assert "$.dist[0][1]" in paths(report)
    assert "$.dist[1][2]" in paths(report)


def test_require_valid_raises_with_report() -> None:
    raw = flagship_raw()
    raw["epsilon"] = "-1"
    with pytest.raises(InvalidInstance) as exc_info:
        require_valid(raw)
    assert not exc_info.value.report.ok


def test_distance_basics() -> None:
    inst = require_valid(flagship_raw())
    assert distance(inst, 1, 1) == 0
    assert distance(inst, 0, 2) == distance(inst, 2, 0) == 2
    with pytest.raises(IndexOutOfRange):
        distance(inst, 0, 3)


def test_path_metric_of_a_three_chain() -> None:
    space = FiniteMetricSpace.path(["a", "b", "c"], [1, 1])
    assert space.distance(0, 2) == 2
    assert space.metric_violations() == []
    with pytest.raises(DimensionMismatch):
        FiniteMetricSpace.path(["a", "b", "c"], [1])


def test_to_file_round_trip() -> None:
    inst = require_valid(flagship_raw())
    dumped = json.loads(inst.to_file().model_dump_json())
    assert dumped["dist"][0][2] == "2/1"
    again = require_valid(InstanceFile.model_validate(dumped))
    assert again == inst


def test_random_instances_are_valid() -> None:
    for seed in range(15):
        inst = generators.create_instance(seed)
        assert inst.space.metric_violations() == []
        assert inst.scalarizer.violations(inst.cone, inst.dset) == []


def test_check_scale() -> None:
    assert check_scale("1/3") == Fraction(1, 3)
    with pytest.raises(NonpositiveScale):
        check_scale(0)
