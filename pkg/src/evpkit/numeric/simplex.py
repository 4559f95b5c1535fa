"""Two-phase tableau simplex over exact rationals.

Entering and leaving variables follow Bland's rule (smallest eligible index, ties in the
ratio test broken by smallest basic index), which rules out cycling on degenerate systems.
"""

import logging
from fractions import Fraction

from evpkit.core.exceptions import MalformedSystem
from evpkit.numeric.system import INFEASIBLE, Feasibility, LinearSystem, Outcome, OutcomeStatus

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]) -> None:
        self.rows = rows
        self.basis = basis
        # Reduced costs; the last entry is minus the current objective value.
        self.cost: list[Fraction] = []
        self.pivots = 0

    def set_cost(self, costs: list[Fraction]) -> None:
        cost = list(costs) + [ZERO]
        for i, b in enumerate(self.basis):
            factor = cost[b]
            if factor != 0:
                cost = [c - factor * a for c, a in zip(cost, self.rows[i])]
        self.cost = cost

    def pivot(self, r: int, c: int) -> None:
        pivot_row = self.rows[r]
        piv = pivot_row[c]
        if piv != 1:
            pivot_row = [a / piv for a in pivot_row]
            self.rows[r] = pivot_row
        for i, row in enumerate(self.rows):
            factor = row[c]
            if i != r and factor != 0:
                self.rows[i] = [a - factor * p for a, p in zip(row, pivot_row)]
        factor = self.cost[c]
        if factor != 0:
            self.cost = [a - factor * p for a, p in zip(self.cost, pivot_row)]
        self.basis[r] = c
        self.pivots += 1

    def run(self, allowed: range) -> bool:
        """Minimize the current cost row; False when the problem is unbounded."""
        while True:
            entering = next((j for j in allowed if self.cost[j] < 0), None)
            if entering is None:
                return True

            leaving = None
            best: tuple[Fraction, int] | None = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (row[-1] / row[entering], self.basis[i])
                    if best is None or key < best:
                        best = key
                        leaving = i
            if leaving is None:
                return False
            self.pivot(leaving, entering)

    @property
    def value(self) -> Fraction:
        return -self.cost[-1]


def _standard_columns(system: LinearSystem) -> list[tuple[int, int]]:
    """Map every standard-form column to (original variable, sign); free variables split in two."""
    columns: list[tuple[int, int]] = []
    for j, nonnegative in enumerate(system.nonnegative):
        columns.append((j, 1))
        if not nonnegative:
            columns.append((j, -1))
    return columns


def _phase_one(system: LinearSystem) -> tuple[_Tableau, list[tuple[int, int]]] | None:
    columns = _standard_columns(system)
    n_std = len(columns)
    m = len(system.rows)

    rows: list[list[Fraction]] = []
    for i, (row, b) in enumerate(zip(system.rows, system.rhs)):
        std = [sign * row[j] for j, sign in columns]
        if b < 0:
            std = [-a for a in std]
            b = -b
        artificial = [Fraction(int(k == i)) for k in range(m)]
        rows.append(std + artificial + [b])

    tableau = _Tableau(rows, [n_std + i for i in range(m)])
    tableau.set_cost([ZERO] * n_std + [Fraction(1)] * m)
    tableau.run(range(n_std + m))

    if tableau.value > 0:
        logger.debug("phase one ended with infeasibility %s after %d pivots", tableau.value, tableau.pivots)
        return None

    # Drive remaining (zero-valued) artificials out of the basis; rows without a structural
    # pivot are linearly dependent on the others and are dropped.
    redundant = []
    for i in range(len(tableau.rows)):
        if tableau.basis[i] < n_std:
            continue
        column = next((j for j in range(n_std) if tableau.rows[i][j] != 0), None)
        if column is None:
            redundant.append(i)
        else:
            tableau.pivot(i, column)
    for i in reversed(redundant):
        del tableau.rows[i]
        del tableau.basis[i]

    return tableau, columns


def _extract(system: LinearSystem, tableau: _Tableau, columns: list[tuple[int, int]]) -> tuple[Fraction, ...]:
    values = [ZERO] * system.num_variables
    for i, b in enumerate(tableau.basis):
        if b < len(columns):
            j, sign = columns[b]
            values[j] += sign * tableau.rows[i][-1]
    witness = tuple(values)
    if not system.satisfied_by(witness):
        raise ArithmeticError("simplex produced a point that does not satisfy its system")
    return witness


def lp_feasible(system: LinearSystem) -> Feasibility:
    """Decide exactly whether the system has a solution; a feasible answer carries a witness."""
    result = _phase_one(system)
    if result is None:
        return INFEASIBLE
    tableau, columns = result
    return Feasibility(True, _extract(system, tableau, columns))


def lp_minimize(system: LinearSystem) -> Outcome:
    if system.objective is None:
        raise MalformedSystem("lp_minimize needs a system with an objective")

    result = _phase_one(system)
    if result is None:
        return Outcome(OutcomeStatus.INFEASIBLE)
    tableau, columns = result

    n_std = len(columns)
    m = len(system.rows)
    costs = [sign * system.objective[j] for j, sign in columns] + [ZERO] * m
    tableau.set_cost(costs)
    if not tableau.run(range(n_std)):
        return Outcome(OutcomeStatus.UNBOUNDED)

    witness = _extract(system, tableau, columns)
    value = system.objective_value(witness)
    logger.debug("optimum %s after %d pivots", value, tableau.pivots)
    return Outcome(OutcomeStatus.OPTIMAL, value, witness)
