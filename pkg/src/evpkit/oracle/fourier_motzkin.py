"""Exact feasibility by variable elimination, independent of the simplex.

Equalities are used first to substitute variables away (Gaussian steps); the remaining
inequalities a.x <= b are projected one variable at a time (Fourier-Motzkin). Combined rows
keep the set of original inequalities they came from, and a row built from more than
k + 1 originals after k eliminations is dropped (Chernikov's rule), which removes redundant
rows without changing the projection. A witness is recovered by back-substitution.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from evpkit.core.config import settings
from evpkit.core.exceptions import TooLarge
from evpkit.numeric import INFEASIBLE, Feasibility, LinearSystem

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


@dataclass(frozen=True)
class _Row:
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    origin: frozenset[int]

    def normalized(self) -> "_Row":
        scale = max((abs(a) for a in self.coeffs), default=ZERO)
        if scale == 0:
            return self
        return _Row(tuple(a / scale for a in self.coeffs), self.rhs / scale, self.origin)


@dataclass(frozen=True)
class _Substitution:
    variable: int
    coeffs: tuple[Fraction, ...]
    rhs: Fraction


@dataclass(frozen=True)
class _Projection:
    variable: int
    rows: tuple[_Row, ...]


Equation = tuple[tuple[Fraction, ...], Fraction]


def _substitute(row: tuple[Fraction, ...], rhs: Fraction, sub: _Substitution) -> Equation:
    factor = row[sub.variable] / sub.coeffs[sub.variable]
    if factor == 0:
        return row, rhs
    return tuple(a - factor * s for a, s in zip(row, sub.coeffs)), rhs - factor * sub.rhs


def _growth(rows: list[_Row], j: int) -> tuple[int, int]:
    """Net number of rows added by eliminating x_j; ties go to the smallest index."""
    pos = sum(1 for row in rows if row.coeffs[j] > 0)
    neg = sum(1 for row in rows if row.coeffs[j] < 0)
    return pos * neg - pos - neg, j


def _dominates(row: _Row, other: _Row) -> bool:
    return row.rhs <= other.rhs and row.origin <= other.origin


def _dedupe(rows: list[_Row]) -> list[_Row]:
    """Drop rows implied by a parallel row that is at least as tight and built from a subset of its originals.

    A tighter row with a larger origin set does not replace a looser one: the pruning rule may
    later discard its descendants, and the looser row's descendants are still needed then.
    """
    groups: dict[tuple[Fraction, ...], list[_Row]] = {}
    for row in rows:
        row = row.normalized()
        group = groups.setdefault(row.coeffs, [])
        if any(_dominates(kept, row) for kept in group):
            continue
        group[:] = [kept for kept in group if not _dominates(row, kept)]
        group.append(row)
    return [row for group in groups.values() for row in group]


def fm_feasible(system: LinearSystem, budget: int | None = None) -> Feasibility:
    """Decide feasibility of the system exactly; raises TooLarge past `budget` eliminations."""
    budget = settings.FM_BUDGET if budget is None else budget
    n = system.num_variables
    eliminated = 0

    equalities = [(row, rhs) for row, rhs in zip(system.rows, system.rhs)]
    inequalities: list[Equation] = [
        (tuple(Fraction(-1) if k == j else ZERO for k in range(n)), ZERO)
        for j, nonnegative in enumerate(system.nonnegative)
        if nonnegative
    ]

    substitutions: list[_Substitution] = []
    while equalities:
        row, rhs = equalities.pop(0)
        pivot = next((j for j, a in enumerate(row) if a != 0), None)
        if pivot is None:
            if rhs != 0:
                return INFEASIBLE
            continue
        eliminated += 1
        if eliminated > budget:
            raise TooLarge(f"more than {budget} variables to eliminate")
        sub = _Substitution(pivot, row, rhs)
        substitutions.append(sub)
        equalities = [_substitute(r, b, sub) for r, b in equalities]
        inequalities = [_substitute(r, b, sub) for r, b in inequalities]

    rows = [_Row(coeffs, rhs, frozenset([i])) for i, (coeffs, rhs) in enumerate(inequalities)]
    projections: list[_Projection] = []
    steps = 0
    while True:
        live = []
        for row in rows:
            if any(a != 0 for a in row.coeffs):
                live.append(row)
            elif row.rhs < 0:
                return INFEASIBLE
        rows = _dedupe(live)

        candidates = {j for row in rows for j, a in enumerate(row.coeffs) if a != 0}
        if not candidates:
            break

        variable = min(candidates, key=lambda j: _growth(rows, j))
        eliminated += 1
        steps += 1
        if eliminated > budget:
            raise TooLarge(f"more than {budget} variables to eliminate")

        upper = [row for row in rows if row.coeffs[variable] > 0]
        lower = [row for row in rows if row.coeffs[variable] < 0]
        kept = [row for row in rows if row.coeffs[variable] == 0]
        projections.append(_Projection(variable, tuple(upper + lower)))

        for p in upper:
            for q in lower:
                origin = p.origin | q.origin
                if len(origin) > steps + 1:
                    continue
                a, b = p.coeffs[variable], -q.coeffs[variable]
                coeffs = tuple(b * x + a * y for x, y in zip(p.coeffs, q.coeffs))
                kept.append(_Row(coeffs, b * p.rhs + a * q.rhs, origin))
        rows = kept
        logger.debug("eliminated x%d, %d rows remain", variable, len(rows))

    values = [ZERO] * n
    for projection in reversed(projections):
        j = projection.variable
        lo: Fraction | None = None
        hi: Fraction | None = None
        for row in projection.rows:
            rest = sum((a * values[k] for k, a in enumerate(row.coeffs) if k != j), ZERO)
            bound = (row.rhs - rest) / row.coeffs[j]
            if row.coeffs[j] > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if (lo is None or lo <= 0) and (hi is None or hi >= 0):
            values[j] = ZERO
        else:
            values[j] = lo if lo is not None else hi  # type: ignore[assignment]

    for sub in reversed(substitutions):
        j = sub.variable
        rest = sum((a * values[k] for k, a in enumerate(sub.coeffs) if k != j), ZERO)
        values[j] = (sub.rhs - rest) / sub.coeffs[j]

    witness = tuple(values)
    if not system.satisfied_by(witness):
        raise ArithmeticError("elimination produced a point that does not satisfy its system")
    return Feasibility(True, witness)
