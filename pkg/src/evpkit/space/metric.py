from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from evpkit.core.exceptions import DimensionMismatch, IndexOutOfRange
from evpkit.numeric import RationalVector, to_rational


@dataclass(frozen=True)
class FiniteMetricSpace:
    """Labelled points with an explicit distance matrix.

    A finite metric space is complete: every Cauchy sequence is eventually constant.
    """

    labels: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.dist) != n or any(len(row) != n for row in self.dist):
            raise DimensionMismatch(f"distance matrix must be {n}x{n}")

    @classmethod
    def parse(cls, labels: Sequence[str], dist: Sequence[Sequence[Any]]) -> "FiniteMetricSpace":
        return cls(tuple(labels), tuple(tuple(to_rational(a) for a in row) for row in dist))

    @classmethod
    def path(cls, labels: Sequence[str], edges: Sequence[Any]) -> "FiniteMetricSpace":
        """Path metric of a chain: d(i, j) is the sum of the edge lengths between i and j."""
        if len(edges) != len(labels) - 1:
            raise DimensionMismatch(f"{len(labels)} points need {len(labels) - 1} edges")
        offsets = [Fraction(0)]
        for edge in edges:
            offsets.append(offsets[-1] + to_rational(edge))
        dist = tuple(tuple(abs(a - b) for b in offsets) for a in offsets)
        return cls(tuple(labels), dist)

    def __len__(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise IndexOutOfRange(f"unknown label {label!r}") from exc

    def check_index(self, index: int) -> None:
        if not 0 <= index < len(self.labels):
            raise IndexOutOfRange(f"point index {index} outside 0..{len(self.labels) - 1}")

    def distance(self, u: int, v: int) -> Fraction:
        self.check_index(u)
        self.check_index(v)
        return self.dist[u][v]

    def rescaled(self, factor: Any) -> "FiniteMetricSpace":
        factor = to_rational(factor)
        return FiniteMetricSpace(self.labels, tuple(tuple(factor * a for a in row) for row in self.dist))

    def metric_violations(self) -> list[tuple[str, str]]:
        """(json path, message) for every violated metric axiom, checked over all triples."""
        issues = []
        n = len(self.labels)
        d = self.dist
        for i in range(n):
            if d[i][i] != 0:
                issues.append((f"$.dist[{i}][{i}]", f"d({i},{i}) = {d[i][i]} must be 0"))
            for j in range(i + 1, n):
                if d[i][j] != d[j][i]:
                    message = f"not symmetric: d({i},{j}) = {d[i][j]} but d({j},{i}) = {d[j][i]}"
                    issues.append((f"$.dist[{i}][{j}]", message))
                if d[i][j] <= 0:
                    issues.append((f"$.dist[{i}][{j}]", f"distinct points {i} and {j} need a positive distance"))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if i == k or j in (i, k):
                        continue
                    if d[i][k] > d[i][j] + d[j][k]:
                        issues.append(
                            (
                                f"$.dist[{i}][{k}]",
                                f"triangle inequality violated at ({i},{j},{k}): "
                                f"d({i},{k}) = {d[i][k]} > d({i},{j}) + d({j},{k}) = {d[i][j] + d[j][k]}",
                            )
                        )
        return issues


@dataclass(frozen=True)
class Objective:
    """Table of f(x), one vector per point.

    On a finite space f is automatically monotonically semicontinuous (convergent sequences
    are eventually constant) and K-bounded (take M = f(X)).
    """

    values: tuple[RationalVector, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise DimensionMismatch("objective table is empty")
        dim = self.values[0].dim
        for i, value in enumerate(self.values):
            if value.dim != dim:
                raise DimensionMismatch(f"f({i}) has dimension {value.dim}, expected {dim}")

    @classmethod
    def parse(cls, rows: Sequence[Sequence[Any]]) -> "Objective":
        return cls(tuple(RationalVector.parse(row) for row in rows))

    @property
    def dim(self) -> int:
        return self.values[0].dim

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> RationalVector:
        return self.values[index]
