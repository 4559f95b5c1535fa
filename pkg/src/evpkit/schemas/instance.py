from fractions import Fraction
from typing import Annotated, List

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from evpkit.schemas.custom_validators import RationalStr


class InstanceFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: PositiveInt
    labels: Annotated[List[str], Field(min_length=1)]
    dist: List[List[RationalStr]]
    f: List[List[RationalStr]]
    cone_generators: Annotated[List[List[RationalStr]], Field(min_length=1)]
    d_vertices: Annotated[List[List[RationalStr]], Field(min_length=1)]
    epsilon: RationalStr = Field(default=Fraction(1))


class ValidationIssue(BaseModel):
    path: str
    message: str


class ValidationReport(BaseModel):
    issues: Annotated[List[ValidationIssue], Field(default_factory=list)]

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, path: str, message: str) -> None:
        self.issues.append(ValidationIssue(path=path, message=message))
