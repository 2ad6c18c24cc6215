import pytest
from hypothesis import given, settings, strategies as st

from gaussphi.core import GaussianInt, I, MINUS_I, MINUS_ONE, ONE, ZERO, \
    UndefinedAtZeroError
from gaussphi.oracle import DIGITS, expansion_eval, expansion_of, phi_oracle
from gaussphi.phi import preimage_count

BASE = GaussianInt(1, 1)

coords = st.integers(-10**6, 10**6)
nonzero_points = st.builds(GaussianInt, coords, coords).filter(
    lambda z: z != ZERO)


def eval_by_powers(digits):
    """Independent evaluation: explicit powers of 1 + i, no Horner."""
    total, power = ZERO, ONE
    for d in digits:
        total = total + d * power
        power = power * BASE
    return total


@pytest.mark.parametrize("digits, expected", [
    ([ONE], GaussianInt(1, 0)),
    ([ZERO, ONE], GaussianInt(1, 1)),
    ([ZERO, ZERO, MINUS_I], GaussianInt(2, 0)),
    ([MINUS_ONE, I, ONE, MINUS_I], eval_by_powers([MINUS_ONE, I, ONE, MINUS_I])),
])
def test_expansion_eval(digits, expected):
    assert expansion_eval(digits) == expected


def test_expansion_eval_rejects_bad_input():
    with pytest.raises(ValueError):
        expansion_eval([])
    with pytest.raises(ValueError):
        expansion_eval([ONE, ZERO])  # leading zero digit
    with pytest.raises(ValueError):
        expansion_eval([GaussianInt(2, 0)])


@given(st.lists(st.sampled_from(DIGITS), min_size=1, max_size=40)
       .filter(lambda d: d[-1] != ZERO))
def test_expansion_eval_matches_power_sum(digits):
    assert expansion_eval(digits) == eval_by_powers(digits)


@pytest.mark.parametrize("z, expected", [
    (GaussianInt(1, 0), 0),
    (GaussianInt(0, -1), 0),
    (GaussianInt(1, 1), 1),
    (GaussianInt(2, 0), 2),
    (GaussianInt(2, 1), 1),
])
def test_phi_oracle_small_values(z, expected):
    assert phi_oracle(z) == expected


def test_undefined_at_zero():
    with pytest.raises(UndefinedAtZeroError):
        phi_oracle(ZERO)
    with pytest.raises(UndefinedAtZeroError):
        expansion_of(ZERO)


@pytest.mark.parametrize("z, expected", [
    (GaussianInt(1, 0), [ONE]),
    (GaussianInt(1, 1), [ZERO, ONE]),
    (GaussianInt(2, 0), [ZERO, ZERO, MINUS_I]),
])
def test_expansion_of_known_digit_lists(z, expected):
    assert expansion_of(z) == expected


def test_round_trip_box():
    for x in range(-24, 25):
        for y in range(-24, 25):
            if x == 0 and y == 0:
                continue
            z = GaussianInt(x, y)
            digits = expansion_of(z)
            assert digits[-1] != ZERO
            assert expansion_eval(digits) == z
            assert len(digits) == phi_oracle(z) + 1


@settings(deadline=None)
@given(nonzero_points)
def test_round_trip_random_points(z):
    digits = expansion_of(z)
    assert digits[-1] != ZERO
    assert expansion_eval(digits) == z
    assert len(digits) == phi_oracle(z) + 1


@settings(deadline=None)
@given(nonzero_points)
def test_digit_forced_by_parity(z):
    """Digit j is zero exactly when the j-th recursion argument has even
    coordinate sum (that is when 1 + i divides it)."""
    current = z
    for d in expansion_of(z):
        even_sum = (current.x + current.y) % 2 == 0
        assert (d == ZERO) is even_sum
        step = current - d
        current = GaussianInt((step.x + step.y) // 2, (step.y - step.x) // 2)
    assert current == ZERO


def test_oracle_counts_reproduce_closed_forms():
    """Count phi_oracle(z) <= n over a box that contains the whole
    pre-image; pure oracle arithmetic, no geometry involved."""
    radius = 46  # contains every point with phi <= 8
    histogram = [0] * 32
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            if x == 0 and y == 0:
                continue
            value = phi_oracle(GaussianInt(x, y))
            if value < len(histogram):
                histogram[value] += 1
    running = 0
    for n in range(9):
        running += histogram[n]
        assert running + 1 == preimage_count(n)


def test_recursion_shrinks_the_norm_outside_the_core():
    """Every admissible quotient of z strictly lowers the norm once the
    modulus exceeds 4, so the memoized recursion terminates."""
    from gaussphi.oracle import _quotient
    for x in range(-12, 13):
        for y in range(-12, 13):
            norm = x * x + y * y
            if norm <= 16:
                continue
            if (x + y) % 2:
                quotients = [_quotient(x - u.x, y - u.y)
                             for u in (ONE, MINUS_ONE, I, MINUS_I)]
            else:
                quotients = [_quotient(x, y)]
            for qx, qy in quotients:
                assert qx * qx + qy * qy < norm, (x, y)


def test_memo_stays_near_the_swept_box(monkeypatch):
    from gaussphi import oracle
    fresh = oracle._solved_core()
    monkeypatch.setattr(oracle, "_lengths", fresh)
    radius = 16
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            if x or y:
                phi_oracle(GaussianInt(x, y))
    assert all(max(abs(x), abs(y)) <= radius + 2 for x, y in fresh)
