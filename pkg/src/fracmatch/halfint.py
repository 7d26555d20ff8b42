"""Exact half-integer values stored as integer counts of halves."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class HalfInt:
    """A nonnegative multiple of 1/2, kept in integer half-units.

    All matching values in this package are half-integral, so arithmetic
    stays in ints; floats never appear.
    """

    units: int

    def __post_init__(self) -> None:
        if not isinstance(self.units, int):
            raise TypeError(f"units must be int, got {type(self.units).__name__}")
        if self.units < 0:
            raise ValueError(f"negative half-unit count: {self.units}")

    @classmethod
    def whole(cls, k: int) -> "HalfInt":
        return cls(2 * k)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.units + other.units)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.units - other.units)

    @property
    def is_integral(self) -> bool:
        return self.units % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.units, 2)

    def __str__(self) -> str:
        if self.units % 2 == 0:
            return str(self.units // 2)
        return f"{self.units}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.units})"
