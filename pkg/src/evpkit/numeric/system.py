from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping

from evpkit.core.exceptions import MalformedSystem
from evpkit.numeric.rational import RationalVector, to_rational


@dataclass(frozen=True)
class LinearSystem:
    """Equalities A x = b over variables that are either free or constrained to x_j >= 0.

    This is the single canonical form shared by the simplex and the Fourier-Motzkin oracle;
    inequalities are compiled into it by `SystemBuilder`.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    nonnegative: tuple[bool, ...]
    objective: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.nonnegative)
        if len(self.rows) != len(self.rhs):
            raise MalformedSystem(f"{len(self.rows)} rows but {len(self.rhs)} right-hand sides")
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise MalformedSystem(f"row {i} has {len(row)} coefficients, expected {n}")
        if self.objective is not None and len(self.objective) != n:
            raise MalformedSystem(f"objective has {len(self.objective)} coefficients, expected {n}")

    @classmethod
    def from_lists(
        cls,
        rows: list[list[Any]],
        rhs: list[Any],
        nonnegative: list[bool],
        objective: list[Any] | None = None,
    ) -> "LinearSystem":
        return cls(
            rows=tuple(tuple(to_rational(a) for a in row) for row in rows),
            rhs=tuple(to_rational(b) for b in rhs),
            nonnegative=tuple(bool(flag) for flag in nonnegative),
            objective=None if objective is None else tuple(to_rational(c) for c in objective),
        )

    @property
    def num_variables(self) -> int:
        return len(self.nonnegative)

    def residuals(self, point: RationalVector | tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        values = tuple(point)
        if len(values) != self.num_variables:
            raise MalformedSystem(f"point has {len(values)} entries, expected {self.num_variables}")
        return tuple(sum((a * x for a, x in zip(row, values)), Fraction(0)) - b for row, b in zip(self.rows, self.rhs))

    def satisfied_by(self, point: RationalVector | tuple[Fraction, ...]) -> bool:
        values = tuple(point)
        if any(flag and x < 0 for flag, x in zip(self.nonnegative, values)):
            return False
        return all(r == 0 for r in self.residuals(values))

    def objective_value(self, point: RationalVector | tuple[Fraction, ...]) -> Fraction:
        if self.objective is None:
            raise MalformedSystem("system has no objective")
        return sum((c * x for c, x in zip(self.objective, tuple(point))), Fraction(0))


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.feasible


INFEASIBLE = Feasibility(False)


class OutcomeStatus(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Outcome:
    status: OutcomeStatus
    value: Fraction | None = None
    witness: tuple[Fraction, ...] | None = None


@dataclass
class SystemBuilder:
    """Incrementally assemble a `LinearSystem` from sparse constraints.

    Rows are given as {variable index: coefficient}. `add_le`/`add_ge` introduce one
    nonnegative slack variable each, so the built system only contains equalities.
    """

    _nonnegative: list[bool] = field(default_factory=list)
    _rows: list[dict[int, Fraction]] = field(default_factory=list)
    _rhs: list[Fraction] = field(default_factory=list)
    _objective: dict[int, Fraction] | None = None

    def add_variable(self, nonnegative: bool = True) -> int:
        self._nonnegative.append(nonnegative)
        return len(self._nonnegative) - 1

    def add_variables(self, count: int, nonnegative: bool = True) -> list[int]:
        return [self.add_variable(nonnegative) for _ in range(count)]

    def _check_indices(self, coefficients: Mapping[int, Any]) -> None:
        for index in coefficients:
            if not 0 <= index < len(self._nonnegative):
                raise MalformedSystem(f"unknown variable {index}")

    def add_eq(self, coefficients: Mapping[int, Any], rhs: Any) -> None:
        self._check_indices(coefficients)
        self._rows.append({j: to_rational(a) for j, a in coefficients.items()})
        self._rhs.append(to_rational(rhs))

    def add_le(self, coefficients: Mapping[int, Any], rhs: Any) -> None:
        slack = self.add_variable(nonnegative=True)
        row = dict(coefficients)
        row[slack] = Fraction(1)
        self.add_eq(row, rhs)

    def add_ge(self, coefficients: Mapping[int, Any], rhs: Any) -> None:
        slack = self.add_variable(nonnegative=True)
        row = dict(coefficients)
        row[slack] = Fraction(-1)
        self.add_eq(row, rhs)

    def minimize(self, coefficients: Mapping[int, Any]) -> None:
        self._check_indices(coefficients)
        self._objective = {j: to_rational(c) for j, c in coefficients.items()}

    def build(self) -> LinearSystem:
        n = len(self._nonnegative)
        rows = tuple(tuple(row.get(j, Fraction(0)) for j in range(n)) for row in self._rows)
        objective = None
        if self._objective is not None:
            objective = tuple(self._objective.get(j, Fraction(0)) for j in range(n))
        return LinearSystem(rows=rows, rhs=tuple(self._rhs), nonnegative=tuple(self._nonnegative), objective=objective)
