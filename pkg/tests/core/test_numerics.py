import math

import numpy as np
import pytest

from src.core.numerics import (
    bisect_decreasing,
    bracket_decreasing,
    decay_exponent,
    integral_tail,
    log_grid,
    minimize_on_log_scale,
    ternary_maximize,
)


def test_log_grid_endpoints():
    grid = log_grid(1e-3, 1e3, 7)
    assert grid[0] == pytest.approx(1e-3)
    assert grid[-1] == pytest.approx(1e3)
    assert np.allclose(np.diff(np.log10(grid)), 1.0)


def test_ternary_maximize_vectorised():
    targets = np.array([0.5, 2.0, 7.0])
    x, value = ternary_maximize(lambda y: -(y - targets) ** 2, np.zeros(3), np.full(3, 10.0), 200)
    assert np.allclose(x, targets, atol=1e-9)
    assert np.all(value <= 0)


def test_bracket_and_bisect_square_root():
    fn = lambda k: 4.0 / k**2
    lo, hi = bracket_decreasing(fn, 1.0, 0.1)
    assert fn(lo) > 1.0 >= fn(hi)
    assert bisect_decreasing(fn, 1.0, lo, hi, 1e-14) == pytest.approx(2.0, rel=1e-12)


def test_minimize_on_log_scale_amemiya_power2():
    # inf_k (1 + k²)/k = 2 at k = 1
    k, value = minimize_on_log_scale(lambda k: (1 + k * k) / k, -10.0, 10.0)
    assert k == pytest.approx(1.0, rel=1e-5)
    assert value == pytest.approx(2.0, rel=1e-10)


def test_integral_tail_of_power():
    value, err = integral_tail(lambda x: x**-1.5, 1.0)
    assert value == pytest.approx(2.0, rel=1e-8)
    assert err < 1e-6


def test_integral_tail_far_out():
    value, err = integral_tail(lambda x: x**-1.5, 1e5)
    assert value == pytest.approx(2.0 / math.sqrt(1e5), rel=1e-8)
    assert err < 1e-8


def test_decay_exponent():
    assert decay_exponent(lambda x: x**-1.5, 10.0) == pytest.approx(1.5, rel=1e-9)
    assert decay_exponent(lambda x: 0.0 if x > 100 else 1.0, 10.0) == math.inf
