"""Octagonal lattice regions and their perforated variants.

A region holds the Gaussian integers with |x|, |y| <= a and |x| + |y| <= b:
a square with its four corners bitten off diagonally.  The nested octagon
family drawn from the bound sequence, and the perforated octagons obtained
by dropping every point with even coordinate gcd, are the building blocks
of the pre-image geometry in the phi module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import GaussianInt, has_odd_gcd, octagon_bound


class RegionBoundsError(ValueError):
    """Raised when region bounds violate 0 < a <= b <= 2a."""


@dataclass(frozen=True, slots=True)
class Region:
    """Lattice region |x| <= a, |y| <= a, |x| + |y| <= b.

    Bounds must satisfy 0 < a <= b <= 2a.  Both degenerate ends are
    allowed: b = a is the diamond, b = 2a the full square.
    """

    a: int
    b: int

    def __post_init__(self):
        if not (0 < self.a <= self.b <= 2 * self.a):
            raise RegionBoundsError(
                f"region bounds must satisfy 0 < a <= b <= 2a, "
                f"got a={self.a}, b={self.b}")

    def contains(self, z: GaussianInt) -> bool:
        ax, ay = abs(z.x), abs(z.y)
        return ax <= self.a and ay <= self.a and ax + ay <= self.b

    def count(self) -> int:
        """Exact number of lattice points, in closed form.

        The (2a+1)**2 square loses a right triangle of side 2a - b at each
        corner, each containing the triangular number of points:
        1 + 4a + 4a**2 - 2(2a-b)(2a-b+1).
        """
        c = 2 * self.a - self.b
        return 1 + 4 * self.a + 4 * self.a * self.a - 2 * c * (c + 1)

    def points(self) -> Iterator[GaussianInt]:
        """Yield every lattice point exactly once, row-major: y ascending,
        then x ascending within the row."""
        for y in range(-self.a, self.a + 1):
            m = min(self.a, self.b - abs(y))
            for x in range(-m, m + 1):
                yield GaussianInt(x, y)


def octagon(n: int) -> Region:
    """The n-th member of the nested octagon family."""
    return Region(octagon_bound(n) - 2, octagon_bound(n + 1) - 3)


def octagon_count(n: int) -> int:
    """Size of octagon(n) written directly in the bound sequence; equals
    octagon(n).count()."""
    w0, w1, w2 = octagon_bound(n), octagon_bound(n + 1), octagon_bound(n + 2)
    d = w2 - w1
    return 1 + 4 * (w0 - 2) + 4 * (w0 - 2) ** 2 - 2 * d * (d - 1)


def even_gcd_count(n: int) -> int:
    """Number of points of octagon(n) whose coordinates are both even.

    Those points are exactly twice the points of a half-scale region, which
    gives the closed form below for n >= 1; n = 0 holds only the origin and
    is handled directly (the general form would need index n - 1).
    """
    if n < 0:
        raise ValueError(f"octagon index must be >= 0, got {n}")
    if n == 0:
        return 1
    w0, w1 = octagon_bound(n), octagon_bound(n - 1)
    d = w0 - w1
    return 1 + 2 * (w0 - 2) + (w0 - 2) ** 2 - 2 * d * (d + 1)


def perforated_count(n: int) -> int:
    """Number of odd-gcd points of octagon(n), in closed form.

    The difference of the two counts above simplifies to
    2(w-2) + 3(w-2)**2 - 6d(d-1) with w the n-th bound and d the step from
    the previous bound; n = 0 is the four units, counted directly.
    """
    if n < 0:
        raise ValueError(f"octagon index must be >= 0, got {n}")
    if n == 0:
        return 4
    w0, w1 = octagon_bound(n), octagon_bound(n - 1)
    d = w0 - w1
    return 2 * (w0 - 2) + 3 * (w0 - 2) ** 2 - 6 * d * (d - 1)


def perforated_contains(n: int, z: GaussianInt) -> bool:
    """Is z a point of octagon(n) with odd coordinate gcd?"""
    return octagon(n).contains(z) and has_odd_gcd(z)


def perforated_points(n: int) -> Iterator[GaussianInt]:
    """Row-major stream of the odd-gcd points of octagon(n)."""
    return (z for z in octagon(n).points() if has_odd_gcd(z))
