import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from evpkit.numeric import RationalVector, SystemBuilder, combine, lp_feasible
from evpkit.relations import FiniteRelation
from evpkit.space import Instance, check_scale

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationWitness:
    """Decomposition f(u) - f(v) = scale * d(u, v) * delta + k with delta in D and k in K.

    delta = sum lam_i d_i (lam a probability vector over the vertices of D) and
    k = sum mu_j g_j (mu >= 0 over the generators of K).
    """

    lam: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]
    delta: RationalVector
    k: RationalVector

    @classmethod
    def build(cls, inst: Instance, lam: tuple[Fraction, ...], mu: tuple[Fraction, ...]) -> "RelationWitness":
        return cls(
            lam=lam,
            mu=mu,
            delta=combine(lam, inst.dset.vertices, inst.dim),
            k=combine(mu, inst.cone.generators, inst.dim),
        )

    @classmethod
    def reflexive(cls, inst: Instance) -> "RelationWitness":
        lam = tuple(Fraction(int(i == 0)) for i in range(len(inst.dset)))
        mu = (Fraction(0),) * len(inst.cone.generators)
        return cls.build(inst, lam, mu)

    def problems(self, inst: Instance, u: int, v: int, scale: Fraction) -> list[str]:
        """Every way in which this witness fails to prove u r v; empty when it substitutes exactly."""
        issues = []
        if len(self.lam) != len(inst.dset) or len(self.mu) != len(inst.cone.generators):
            return [f"weights have shape ({len(self.lam)}, {len(self.mu)}), instance needs "
                    f"({len(inst.dset)}, {len(inst.cone.generators)})"]
        if self.delta.dim != inst.dim or self.k.dim != inst.dim:
            return [f"witness vectors must have dimension {inst.dim}"]
        if any(a < 0 for a in self.lam) or sum(self.lam) != 1:
            issues.append("lambda is not a probability vector")
        if any(a < 0 for a in self.mu):
            issues.append("mu has a negative entry")
        if self.delta != combine(self.lam, inst.dset.vertices, inst.dim):
            issues.append("delta differs from sum lambda_i d_i")
        if self.k != combine(self.mu, inst.cone.generators, inst.dim):
            issues.append("k differs from sum mu_j g_j")
        residual = inst.f(u) - inst.f(v) - self.delta.scale(scale * inst.distance(u, v)) - self.k
        if not residual.is_zero():
            issues.append(f"substitution residual {residual} is not zero")
        return issues

    def verifies(self, inst: Instance, u: int, v: int, scale: Fraction) -> bool:
        return not self.problems(inst, u, v, scale)


def decompose(
    inst: Instance,
    difference: RationalVector,
    coefficient: Fraction,
    cone_coefficient: Fraction | None = None,
) -> RelationWitness | None:
    """Find lam, mu with difference = coefficient * sum lam_i d_i + sum mu_j g_j, or None.

    With `cone_coefficient` an extra conic term cone_coefficient * sum nu_j g_j is allowed;
    it is folded into mu in the returned witness.
    """
    p, q = len(inst.dset), len(inst.cone.generators)

    builder = SystemBuilder()
    lam = builder.add_variables(p)
    mu = builder.add_variables(q)
    nu = builder.add_variables(q) if cone_coefficient is not None else []
    extra = cone_coefficient or Fraction(0)
    for c in range(inst.dim):
        row: dict[int, Fraction] = {}
        for i, d in enumerate(inst.dset.vertices):
            row[lam[i]] = coefficient * d[c]
        for j, g in enumerate(inst.cone.generators):
            row[mu[j]] = g[c]
            if nu:
                row[nu[j]] = extra * g[c]
        builder.add_eq(row, difference[c])
    builder.add_eq({a: 1 for a in lam}, 1)

    result = lp_feasible(builder.build())
    if not result.feasible or result.witness is None:
        return None

    values = result.witness
    weights = [values[j] for j in mu]
    if nu:
        weights = [w + extra * values[j] for w, j in zip(weights, nu)]
    return RelationWitness.build(inst, tuple(values[i] for i in lam), tuple(weights))


def relation_r(inst: Instance, u: int, v: int, scale: Any = 1) -> RelationWitness | None:
    """u r v iff (f(u) - K) meets f(v) + scale * d(u, v) * D; None means not related."""
    scale = check_scale(scale)
    inst.space.check_index(u)
    inst.space.check_index(v)
    if u == v:
        return RelationWitness.reflexive(inst)
    return decompose(inst, inst.f(u) - inst.f(v), scale * inst.distance(u, v))


def relation_r_dk(inst: Instance, u: int, v: int, scale: Any = 1) -> RelationWitness | None:
    """Variant with D + K in place of D: (f(u) - K) meets f(v) + scale * d(u, v) * (D + K)."""
    scale = check_scale(scale)
    inst.space.check_index(u)
    inst.space.check_index(v)
    if u == v:
        return RelationWitness.reflexive(inst)
    coefficient = scale * inst.distance(u, v)
    return decompose(inst, inst.f(u) - inst.f(v), coefficient, cone_coefficient=coefficient)


def may_relate(inst: Instance, u: int, v: int, scale: Fraction) -> bool:
    """Necessary condition for u r v with u != v: <y*, f(u) - f(v)> >= scale * d(u, v).

    Holds because <y*, d> >= 1 on D and <y*, k> >= 0 on K; used to skip hopeless programs.
    """
    y = inst.scalarizer
    return y(inst.f(u)) - y(inst.f(v)) >= scale * inst.distance(u, v)


def attainable_set(inst: Instance, x: int, scale: Any = 1) -> set[int]:
    """A = {v : x r v}, the set in which the Ekeland point is searched."""
    scale = check_scale(scale)
    inst.space.check_index(x)
    return {
        v
        for v in range(inst.size)
        if v == x or (may_relate(inst, x, v, scale) and relation_r(inst, x, v, scale) is not None)
    }


def relation_matrix(inst: Instance, scale: Any = 1) -> FiniteRelation:
    scale = check_scale(scale)
    pairs = [
        (u, v)
        for u in range(inst.size)
        for v in range(inst.size)
        if u == v or (may_relate(inst, u, v, scale) and relation_r(inst, u, v, scale) is not None)
    ]
    logger.debug("relation r has %d pairs over %d points", len(pairs), inst.size)
    return FiniteRelation.from_pairs(inst.size, pairs)
