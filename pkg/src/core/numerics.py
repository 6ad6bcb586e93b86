"""
Shared scalar and grid numerics used by the analysis modules.
"""
import math
from typing import Callable, Tuple

import numpy as np
from scipy import integrate, optimize

ArrayFn = Callable[[np.ndarray], np.ndarray]


def log_grid(lo: float, hi: float, points: int) -> np.ndarray:
    """Logarithmically spaced grid on [lo, hi], both ends included."""
    return np.geomspace(lo, hi, points)


def ternary_maximize(
    objective: ArrayFn,
    lo: np.ndarray,
    hi: np.ndarray,
    iterations: int,
    rtol: float = 0.0,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorised ternary search for the maximum of concave objectives.

    ``objective`` maps an array of abscissae (one per bracket) to values.
    Every bracket [lo_i, hi_i] shrinks by a factor 2/3 per iteration until
    its width drops below ``rtol`` times its magnitude or ``iterations`` is exhausted.
    Returns the arg-max estimates and the objective values there.
    """
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    for _ in range(iterations):
        active = (hi - lo) > rtol * np.maximum(np.abs(hi), np.finfo(float).tiny)
        if not active.any():
            break
        third = (hi - lo) / 3.0
        m1 = lo + third
        m2 = hi - third
        f1 = objective(m1)
        f2 = objective(m2)
        lo = np.where(active & (f1 < f2), m1, lo)
        hi = np.where(active & (f1 >= f2), m2, hi)
    x = (lo + hi) / 2.0
    return x, objective(x)


def bisect_decreasing(
    fn: Callable[[float], float], level: float, lo: float, hi: float, rtol: float
) -> float:
    """Smallest k in [lo, hi] with fn(k) <= level for fn nonincreasing in k."""
    return float(
        optimize.bisect(lambda k: fn(k) - level, lo, hi, xtol=1e-300, rtol=max(rtol, 4 * np.finfo(float).eps))
    )


def bracket_decreasing(
    fn: Callable[[float], float], level: float, start: float, max_steps: int = 2048
) -> Tuple[float, float]:
    """
    Find lo < hi with fn(lo) > level >= fn(hi) by doubling/halving from ``start``.
    """
    hi = start
    steps = 0
    while fn(hi) > level:
        hi *= 2.0
        steps += 1
        if steps > max_steps:
            raise ArithmeticError("could not bracket from above")
    lo = hi
    while fn(lo) <= level:
        lo /= 2.0
        steps += 1
        if steps > max_steps:
            raise ArithmeticError("could not bracket from below")
    # the previous value of lo (2 * lo) satisfied fn <= level
    return lo, 2.0 * lo


def minimize_on_log_scale(
    fn: Callable[[float], float], log_lo: float, log_hi: float, grid_points: int = 161
) -> Tuple[float, float]:
    """
    Minimise a quasi-convex function of k > 0 over [e^log_lo, e^log_hi].

    A coarse grid in log k locates the basin; Brent's bounded search
    (golden-section steps with parabolic interpolation) refines it.
    Returns (k*, fn(k*)).
    """
    grid = np.linspace(log_lo, log_hi, grid_points)
    values = np.array([fn(math.exp(t)) for t in grid])
    i = int(np.nanargmin(values))
    a = grid[max(i - 1, 0)]
    b = grid[min(i + 1, grid_points - 1)]
    result = optimize.minimize_scalar(
        lambda t: fn(math.exp(t)),
        bounds=(a, b),
        method="bounded",
        options={"xatol": 1e-12, "maxiter": 500},
    )
    best_t, best_v = (result.x, result.fun) if result.fun <= values[i] else (grid[i], values[i])
    return math.exp(best_t), float(best_v)


def integral_tail(fn: Callable[[float], float], start: float) -> Tuple[float, float]:
    """
    Return (value, abserr) of the integral of ``fn`` over [start, inf): quad on
    [start, 10·start], then x = 1/t maps the rest onto the finite (0, 1/(10·start)].
    """
    split = 10.0 * start

    def substituted(t: float) -> float:
        return fn(1.0 / t) / (t * t) if t > 0.0 else 0.0

    head, head_err = integrate.quad(fn, start, split, limit=200)
    rest, rest_err = integrate.quad(substituted, 0.0, 1.0 / split, limit=200)
    return float(head + rest), float(head_err + rest_err)


def integral(fn: Callable[[float], float], a: float, b: float) -> Tuple[float, float]:
    value, abserr = integrate.quad(fn, a, b, limit=200)
    return float(value), float(abserr)


def decay_exponent(fn: Callable[[float], float], x0: float, decades: float = 6.0) -> float:
    """
    Log-log slope s with fn(x) ~ x^{-s}, measured between x0 and x0 * 10^decades.
    Returns +inf when fn vanishes at the far end.
    """
    x1 = x0 * 10.0**decades
    v0, v1 = fn(x0), fn(x1)
    if v1 <= 0.0:
        return math.inf
    if v0 <= 0.0:
        return -math.inf
    return -(math.log(v1) - math.log(v0)) / (math.log(x1) - math.log(x0))
