"""Forward blend, inverse, and the divergence guard."""

import numpy as np
import pytest

from lumablend.blend import (
    SingularOpacityError,
    forward,
    invert,
    inverse_range_bound,
)
from lumablend.opacity import DEFAULT_POWER, AffineOpacity, opacity


def test_forward_trivial():
    assert forward(0.3, 0.9, 1.0) == 0.3
    assert forward(0.3, 0.9, 0.0) == 0.9
    for y in (0.0, 0.25, 1.0):
        assert forward(0.5, 0.5, y) == 0.5


def test_forward_affine_example():
    # affine opacity at s=0.5 is 0.8; 0.8*0.2 + 0.2*0.8 = 0.32
    assert forward(0.2, 0.8, 0.8) == pytest.approx(0.32, abs=1e-15)


def test_forward_validates_inputs():
    for bad in ((1.2, 0.5, 0.5), (0.5, -0.1, 0.5), (0.5, 0.5, 1.5)):
        with pytest.raises(ValueError):
            forward(*bad)


def test_forward_barycentric_containment():
    rng = np.random.default_rng(5)
    for _ in range(500):
        l_p, i_a, y = rng.uniform(0.0, 1.0, 3)
        out = forward(l_p, i_a, y)
        assert min(l_p, i_a) - 1e-15 <= out <= max(l_p, i_a) + 1e-15


def test_forward_monotone_in_each_argument():
    rng = np.random.default_rng(6)
    for _ in range(200):
        l_p, i_a, y, d = rng.uniform(0.0, 0.9, 4)
        d *= 0.1
        assert forward(l_p + d, i_a, y) >= forward(l_p, i_a, y)
        assert forward(l_p, i_a + d, y) >= forward(l_p, i_a, y)
        if l_p > i_a:
            assert forward(l_p, i_a, min(1.0, y + d)) >= forward(l_p, i_a, y)


def test_invert_round_trip():
    assert invert(forward(0.37, 0.62, 0.8), 0.62, 0.8) == pytest.approx(0.37, abs=1e-12)


def test_invert_matching_background():
    for y in (0.01, 0.4, 1.0):
        assert invert(0.55, 0.55, y) == pytest.approx(0.55, abs=1e-12)


def test_invert_guard():
    with pytest.raises(SingularOpacityError):
        invert(0.5, 0.5, 0.001, epsilon=0.01)
    with pytest.raises(ValueError):
        invert(0.5, 0.5, 0.5, epsilon=0.0)


def test_round_trip_with_power_opacity():
    rng = np.random.default_rng(9)
    for _ in range(10_000):
        l_p, i_a = rng.uniform(0.0, 1.0, 2)
        s = rng.uniform(0.05, 1.0)
        y = opacity(DEFAULT_POWER, s)
        assert abs(invert(forward(l_p, i_a, y), i_a, y) - l_p) < 1e-9


def test_power_inverse_divergence():
    # The recovered value grows without bound as s shrinks, until the guard
    # fires below the configured epsilon.
    epsilon = 0.1
    l_o, i_a = 0.2, 0.8
    previous = None
    fired_at = None
    for k in range(1, 12):
        y = opacity(DEFAULT_POWER, 10.0**-k)
        if y < epsilon:
            with pytest.raises(SingularOpacityError):
                invert(l_o, i_a, y, epsilon=epsilon)
            fired_at = k
            break
        value = invert(l_o, i_a, y, epsilon=epsilon)
        assert previous is None or value < previous  # more negative: diverging
        previous = value
    assert fired_at is not None


def test_inverse_range_bound():
    assert inverse_range_bound(AffineOpacity(0.6, 1.0)) == pytest.approx(1 / 0.6, abs=1e-12)
    assert inverse_range_bound(AffineOpacity(1.0, 1.0)) == 1.0
    assert inverse_range_bound(AffineOpacity(0.5, 0.5)) == 2.0
    # grid oracle
    grid = np.linspace(0.0, 1.0, 10001)
    oracle = (1.0 / (0.6 + 0.4 * grid)).max()
    assert inverse_range_bound(AffineOpacity(0.6, 1.0)) == pytest.approx(oracle, abs=1e-9)
    with pytest.raises(ValueError):
        inverse_range_bound(AffineOpacity(0.0, 1.0))
