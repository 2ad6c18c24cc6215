"""Ground-truth evaluation of the minimal Euclidean function by exhaustive
base-(1+i) digit expansion.

A nonzero Gaussian integer z is written as sum_j d_j * (1+i)**j with digits
d_j drawn from {0, 1, -1, i, -i} and a nonzero leading digit; phi(z) is the
least possible top exponent, i.e. the shortest digit count minus one.
Divisibility by 1+i is a parity test (x + y even), which forces digit 0
there and admits any of the four units otherwise, so the minimal length
obeys a recursion over the quotients (z - u) / (1+i).

Termination needs care.  The quotient modulus is at most (|z| + 1)/sqrt(2),
which strictly shrinks the norm once it exceeds 5, but the 20 nonzero
points of norm <= 5 are closed under taking quotients and contain genuine
cycles (2+i -> 2-i -> 1-2i -> ...).  Those 21 values are therefore solved
up front by value iteration; outside that core every recursive call
strictly decreases the norm, which makes the memoized recursion exact.
"""

from __future__ import annotations

from typing import Sequence

from .core import GaussianInt, UNITS, ZERO, UndefinedAtZeroError

#: Admissible digits in the fixed tie-breaking order: zero, then the units.
DIGITS = (ZERO,) + UNITS

_UNIT_XY = tuple((u.x, u.y) for u in UNITS)


def _quotient(x: int, y: int) -> tuple[int, int]:
    # (x + yi) / (1 + i), exact only when x + y is even
    return (x + y) >> 1, (y - x) >> 1


def _solved_core() -> dict[tuple[int, int], int]:
    core = [(x, y) for x in range(-2, 3) for y in range(-2, 3)
            if 0 < x * x + y * y <= 5]
    inf = float("inf")
    val: dict[tuple[int, int], float] = dict.fromkeys(core, inf)
    val[0, 0] = 0
    for _ in range(len(core) + 1):
        for x, y in core:
            if (x + y) & 1:
                best = inf
                for ux, uy in _UNIT_XY:
                    dx, dy = x - ux, y - uy
                    c = 1 if dx == 0 == dy else 1 + val.get(_quotient(dx, dy), inf)
                    if c < best:
                        best = c
            else:
                best = 1 + val.get(_quotient(x, y), inf)
            if best < val[x, y]:
                val[x, y] = best
    del val[0, 0]
    assert all(v != inf for v in val.values())
    return {p: int(v) for p, v in val.items()}


# Minimal digit counts, seeded with the solved core.  Grows per process;
# concurrent refills are benign because values for a key never differ.
_lengths: dict[tuple[int, int], int] = _solved_core()


def _min_length(x: int, y: int) -> int:
    v = _lengths.get((x, y))
    if v is not None:
        return v
    if (x + y) & 1:
        v = None
        for ux, uy in _UNIT_XY:
            dx, dy = x - ux, y - uy
            c = 1 if dx == 0 == dy else 1 + _min_length(*_quotient(dx, dy))
            if v is None or c < v:
                v = c
    else:
        v = 1 + _min_length(*_quotient(x, y))
    _lengths[x, y] = v
    return v


def phi_oracle(z: GaussianInt) -> int:
    """Least top exponent over all expansions of z: exhaustively minimal,
    hence exact."""
    if z == ZERO:
        raise UndefinedAtZeroError("no expansion exists for 0")
    return _min_length(z.x, z.y) - 1


def expansion_of(z: GaussianInt) -> list[GaussianInt]:
    """A shortest expansion of z, least-significant digit first.

    Deterministic: where several unit digits reach the minimum, the first
    in DIGITS order wins.
    """
    if z == ZERO:
        raise UndefinedAtZeroError("no expansion exists for 0")
    digits: list[GaussianInt] = []
    x, y = z.x, z.y
    while x or y:
        if (x + y) & 1:
            best_u, best_c = None, None
            for u in UNITS:
                dx, dy = x - u.x, y - u.y
                c = 0 if dx == 0 == dy else _min_length(*_quotient(dx, dy))
                if best_c is None or c < best_c:
                    best_u, best_c = u, c
            digits.append(best_u)
            x, y = _quotient(x - best_u.x, y - best_u.y)
        else:
            digits.append(ZERO)
            x, y = _quotient(x, y)
    return digits


def expansion_eval(digits: Sequence[GaussianInt]) -> GaussianInt:
    """Exact value of a digit list (least-significant first)."""
    if not digits:
        raise ValueError("expansion must not be empty")
    if digits[-1] == ZERO:
        raise ValueError("leading digit must be nonzero")
    for d in digits:
        if d not in DIGITS:
            raise ValueError(f"not an admissible digit: {d}")
    x = y = 0
    for d in reversed(digits):
        x, y = x - y + d.x, x + y + d.y  # acc*(1+i) + d
    return GaussianInt(x, y)
