"""Labels in G = Q/2Z, restricted to the finite subgroup (1/D)Z/2Z."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Label:
    """An element of Q/2Z stored by its representative in [0, 2)."""

    value: Fraction

    def __init__(self, value=0):
        object.__setattr__(self, "value", as_fraction(value) % 2)

    def __add__(self, other: "Label") -> "Label":
        return Label(self.value + Label.coerce(other).value)

    def __sub__(self, other: "Label") -> "Label":
        return Label(self.value - Label.coerce(other).value)

    def __neg__(self) -> "Label":
        return Label(-self.value)

    def __mul__(self, k: int) -> "Label":
        if not isinstance(k, int):
            raise TypeError("labels can only be scaled by integers")
        return Label(self.value * k)

    __rmul__ = __mul__

    @staticmethod
    def coerce(x) -> "Label":
        return x if isinstance(x, Label) else Label(x)

    def fits(self, D: int) -> bool:
        return D % self.value.denominator == 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Label({self.value})"


def label_sample(D: int) -> list[Label]:
    """All of (1/D)Z/2Z in increasing order."""
    return [Label(Fraction(k, D)) for k in range(2 * D)]
