from typing import Annotated, List

from pydantic import BaseModel, Field


class AuditCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class AuditReport(BaseModel):
    checks: Annotated[List[AuditCheck], Field(default_factory=list)]

    @property
    def overall(self) -> bool:
        return bool(self.checks) and all(check.passed for check in self.checks)

    def record(self, name: str, problems: list[str]) -> None:
        self.checks.append(AuditCheck(name=name, passed=not problems, detail="; ".join(problems)))

    def failed(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]
