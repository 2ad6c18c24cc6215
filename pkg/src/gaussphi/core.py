"""Exact Gaussian-integer arithmetic and the small predicates everything
else is built from.

All coordinates are plain Python integers, so arithmetic is exact at any
size; there is no overflow to guard against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class UndefinedAtZeroError(ValueError):
    """Raised by operations that have no value at z = 0."""


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """A Gaussian integer x + yi with exact integer coordinates."""

    x: int
    y: int

    def __post_init__(self):
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError(
                f"coordinates must be exact integers, got ({self.x!r}, {self.y!r})")

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.x - other.x, self.y - other.y)

    def __mul__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.x * other.x - self.y * other.y,
                               self.x * other.y + self.y * other.x)
        if isinstance(other, int):
            return GaussianInt(self.x * other, self.y * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.x, -self.y)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.x, -self.y)

    def norm(self) -> int:
        """The absolute norm x**2 + y**2."""
        return self.x * self.x + self.y * self.y

    def __str__(self) -> str:
        return f"{self.x}{self.y:+d}i"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
MINUS_ONE = GaussianInt(-1, 0)
I = GaussianInt(0, 1)
MINUS_I = GaussianInt(0, -1)

#: The four units of Z[i], in the fixed tie-breaking order used throughout.
UNITS = (ONE, MINUS_ONE, I, MINUS_I)


def octagon_bound(n: int) -> int:
    """Term n of the bound sequence 3, 4, 6, 8, 12, 16, ... that drives the
    nested octagon family: 3*2**k at even index 2k, 4*2**k at odd index
    2k + 1.  Doubles every two steps.
    """
    if n < 0:
        raise ValueError(f"sequence index must be >= 0, got {n}")
    k, odd = divmod(n, 2)
    return (4 << k) if odd else (3 << k)


def two_adic_valuation(z: GaussianInt) -> int:
    """Largest j such that 2**j divides both coordinates of z (z != 0).

    A zero coordinate imposes no constraint, so this is the exponent of 2
    in gcd(x, y).
    """
    if z == ZERO:
        raise UndefinedAtZeroError("two-adic valuation undefined at 0")
    g = math.gcd(z.x, z.y)
    return (g & -g).bit_length() - 1


def is_unit(z: GaussianInt) -> bool:
    """True exactly for 1, -1, i and -i."""
    return z.norm() == 1


def has_odd_gcd(z: GaussianInt) -> bool:
    """True iff gcd(x, y) is odd, i.e. at least one coordinate is odd.

    gcd(0, 0) = 0 counts as even, so the origin is excluded.
    """
    return bool((z.x | z.y) & 1)
