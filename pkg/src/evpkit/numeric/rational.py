from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Iterator, Sequence

from evpkit.core.exceptions import DimensionMismatch, ParseException


class NormTag(str, Enum):
    ONE = "one"
    INF = "inf"


def to_rational(value: Any) -> Fraction:
    """Convert to an exact rational, rejecting binary floating point.

    Accepted: int, Fraction, and strings in "p/q", integer or decimal form ("0.5" -> 1/2).
    """
    if isinstance(value, bool):
        raise ParseException(f"cannot read a boolean as a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseException(f"binary floating point is not accepted, pass a string instead: {value!r}")
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseException(f"not a rational literal: {value!r}") from exc
    raise ParseException(f"cannot read {type(value).__name__} as a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical wire form, always "p/q" (integers as "n/1")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalVector:
    """Exact point of Q^m."""

    components: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise DimensionMismatch("vectors need at least one component")
        object.__setattr__(self, "components", tuple(to_rational(c) for c in self.components))

    @classmethod
    def of(cls, *values: Any) -> "RationalVector":
        return cls(tuple(to_rational(v) for v in values))

    @classmethod
    def parse(cls, values: Iterable[Any]) -> "RationalVector":
        return cls(tuple(to_rational(v) for v in values))

    @classmethod
    def zeros(cls, dim: int) -> "RationalVector":
        return cls((Fraction(0),) * dim)

    @classmethod
    def unit(cls, dim: int, index: int) -> "RationalVector":
        return cls(tuple(Fraction(int(i == index)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.components)

    def __getitem__(self, index: int) -> Fraction:
        return self.components[index]

    def _check(self, other: "RationalVector") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimension {self.dim} does not match {other.dim}")

    def __add__(self, other: "RationalVector") -> "RationalVector":
        self._check(other)
        return RationalVector(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "RationalVector") -> "RationalVector":
        self._check(other)
        return RationalVector(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "RationalVector":
        return RationalVector(tuple(-a for a in self.components))

    def scale(self, factor: Any) -> "RationalVector":
        factor = to_rational(factor)
        return RationalVector(tuple(factor * a for a in self.components))

    def dot(self, other: "RationalVector") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.components, other.components)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.components)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.components)

    def positive_part(self) -> "RationalVector":
        return RationalVector(tuple(max(a, Fraction(0)) for a in self.components))

    def negative_part(self) -> "RationalVector":
        return RationalVector(tuple(max(-a, Fraction(0)) for a in self.components))

    def norm(self, tag: NormTag | str) -> Fraction:
        if NormTag(tag) is NormTag.ONE:
            return sum((abs(a) for a in self.components), Fraction(0))
        return max(abs(a) for a in self.components)

    def to_strings(self) -> list[str]:
        return [format_rational(a) for a in self.components]

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.components) + ")"


def combine(weights: Sequence[Fraction], vectors: Sequence[RationalVector], dim: int) -> RationalVector:
    """Linear combination sum(w_i * v_i); the zero vector of `dim` when empty."""
    total = [Fraction(0)] * dim
    for weight, vector in zip(weights, vectors):
        if weight == 0:
            continue
        for i, component in enumerate(vector.components):
            total[i] += weight * component
    return RationalVector(tuple(total))
