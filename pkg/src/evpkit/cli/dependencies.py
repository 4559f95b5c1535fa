import csv
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

import click
from pydantic import BaseModel, ValidationError

from evpkit.core.exceptions import InvalidInstance, ParseException, SchemaMismatch
from evpkit.numeric import RationalVector, to_rational
from evpkit.principle import EkelandCertificate
from evpkit.schemas.certificate import CertificateFile
from evpkit.schemas.custom_validators import json_path
from evpkit.schemas.instance import InstanceFile, ValidationReport
from evpkit.space import Instance, validate

logger = logging.getLogger(__name__)


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> Fraction:
        try:
            return to_rational(value)
        except ParseException as exc:
            self.fail(exc.detail, param, ctx)


class VectorParam(click.ParamType):
    """Comma-separated rationals, e.g. "1,1/2"."""

    name = "vector"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> RationalVector:
        if isinstance(value, RationalVector):
            return value
        try:
            return RationalVector.parse(part for part in str(value).split(","))
        except ParseException as exc:
            self.fail(exc.detail, param, ctx)


RATIONAL = RationalParam()
VECTOR = VectorParam()


def read_json(path: Path) -> Any:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseException(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseException(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def parse_model(model: type[BaseModel], path: Path) -> Any:
    """Read `path` into `model`; schema errors become a SchemaMismatch carrying a report."""
    try:
        return model.model_validate(read_json(path))
    except ValidationError as exc:
        report = ValidationReport()
        for error in exc.errors():
            report.add(json_path(tuple(error["loc"])), error["msg"])
        raise SchemaMismatch(report, f"{path} does not match the {model.__name__} schema") from exc


def load_instance_file(path: Path) -> InstanceFile:
    return parse_model(InstanceFile, path)


def load_instance(path: Path) -> Instance:
    result = validate(load_instance_file(path))
    if isinstance(result, ValidationReport):
        raise InvalidInstance(result, f"{path} is not a valid instance")
    logger.info("loaded %s: %d points in dimension %d", path, result.size, result.dim)
    return result


def load_certificate(path: Path, inst: Instance) -> EkelandCertificate:
    cert_file: CertificateFile = parse_model(CertificateFile, path)
    return cert_file.to_certificate(inst)


def write_model(path: Path, model: BaseModel) -> None:
    path.write_text(model.model_dump_json(indent=2, by_alias=True) + "\n", encoding="utf-8")


def write_csv(path: Path, header: list[str], rows: Iterable[list[Any]]) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)

