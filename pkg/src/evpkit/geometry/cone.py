from dataclasses import dataclass
from typing import Iterable, Sequence

from evpkit.core.exceptions import DimensionMismatch
from evpkit.numeric import RationalVector, SystemBuilder, lp_feasible


@dataclass(frozen=True)
class PolyhedralCone:
    """K = {sum mu_j g_j : mu_j >= 0}, closed and convex by construction."""

    generators: tuple[RationalVector, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise DimensionMismatch("a cone needs at least one generator")
        dim = self.generators[0].dim
        for j, generator in enumerate(self.generators):
            if generator.dim != dim:
                raise DimensionMismatch(f"generator {j} has dimension {generator.dim}, expected {dim}")
            if generator.is_zero():
                raise DimensionMismatch(f"generator {j} is the zero vector")

    @classmethod
    def parse(cls, generators: Iterable[Iterable[object]]) -> "PolyhedralCone":
        return cls(tuple(RationalVector.parse(g) for g in generators))

    @classmethod
    def orthant(cls, dim: int) -> "PolyhedralCone":
        return cls(tuple(RationalVector.unit(dim, i) for i in range(dim)))

    @property
    def dim(self) -> int:
        return self.generators[0].dim

    def is_in_orthant(self) -> bool:
        return all(g.is_nonnegative() for g in self.generators)


def cone_contains(cone: PolyhedralCone, y: RationalVector) -> bool:
    if y.dim != cone.dim:
        raise DimensionMismatch(f"vector of dimension {y.dim} tested against a cone in dimension {cone.dim}")
    if y.is_zero():
        return True

    builder = SystemBuilder()
    mu = builder.add_variables(len(cone.generators))
    for c in range(cone.dim):
        builder.add_eq({mu[j]: g[c] for j, g in enumerate(cone.generators)}, y[c])
    return lp_feasible(builder.build()).feasible


def leq_K(cone: PolyhedralCone, x: RationalVector, y: RationalVector) -> bool:
    """x <=_K y, i.e. y - x lies in K."""
    if x.dim != y.dim:
        raise DimensionMismatch(f"cannot compare vectors of dimension {x.dim} and {y.dim}")
    return cone_contains(cone, y - x)


def check_same_dimension(cone: PolyhedralCone, vectors: Sequence[RationalVector], what: str) -> None:
    for i, vector in enumerate(vectors):
        if vector.dim != cone.dim:
            raise DimensionMismatch(f"{what} {i} has dimension {vector.dim}, cone has {cone.dim}")
