"""
Modular, Luxemburg and Orlicz norms, the dual-sup oracle, Hölder's inequality and ‖·‖_{1,w}.
The weighted norms follow ‖f‖_{Φ,w} := ‖f·w‖_Φ.
"""
import math
from itertools import combinations
from typing import Callable, Optional, Tuple

import numpy as np
from loguru import logger

from src.core.config import settings
from src.core.exceptions import MethodInapplicableError
from src.core.numerics import ArrayFn, bisect_decreasing, bracket_decreasing, minimize_on_log_scale
from src.modules.orlicz.models import OrliczFunction, Weight
from src.modules.orlicz.schemas import HolderReport
from src.modules.young.models import YoungFunction
from src.modules.young.services.calculus import conjugate

# Amemiya search half-width in log k around 1/‖f‖_Lux
AMEMIYA_LOG_SPAN = 30.0


def _magnitudes(f: OrliczFunction, w: Optional[Weight]) -> Tuple[np.ndarray, np.ndarray]:
    a = f.abs_array()
    if w is not None:
        a = a * w.array(f.support)
    return a, f.haar_array()


def _rho(phi: YoungFunction, a: np.ndarray, h: np.ndarray) -> Callable[[float], float]:
    """k ↦ Σ Φ(k·a)·h."""
    return lambda k: math.fsum(phi.values(k * a) * h)


def modular(phi: YoungFunction, f: OrliczFunction, w: Optional[Weight] = None) -> float:
    """Σ_x Φ(|f(x)|·w(x))·h(x)."""
    if f.is_zero:
        return 0.0
    a, h = _magnitudes(f, w)
    return _rho(phi, a, h)(1.0)


def luxemburg_norm(
    phi: YoungFunction, f: OrliczFunction, w: Optional[Weight] = None, tol: Optional[float] = None
) -> float:
    """inf{k > 0 : modular(f/k) <= 1} by bracketing and bisection."""
    if f.is_zero:
        return 0.0
    tol = tol or settings.NORM_TOL
    a, h = _magnitudes(f, w)
    rho = _rho(phi, a, h)

    def scaled(k: float) -> float:
        return rho(1.0 / k)

    lo, hi = bracket_decreasing(scaled, 1.0, float(a.max()))
    k = bisect_decreasing(scaled, 1.0, lo, hi, tol)
    if scaled(k) > 1.0:
        k *= 1.0 + tol
    return k


def orlicz_norm(
    phi: YoungFunction, f: OrliczFunction, w: Optional[Weight] = None, tol: Optional[float] = None
) -> float:
    """
    Amemiya form inf_{k>0} (1 + modular(k·f))/k, minimised over log k.
    The value at k = 1/‖f‖_Lux (which is 2‖f‖_Lux) is kept as a candidate.
    """
    if f.is_zero:
        return 0.0
    lux = luxemburg_norm(phi, f, w, tol)
    a, h = _magnitudes(f, w)
    rho = _rho(phi, a, h)

    def amemiya(k: float) -> float:
        value = rho(k)
        return (1.0 + value) / k if math.isfinite(value) else math.inf

    center = -math.log(lux)
    _, best = minimize_on_log_scale(amemiya, center - AMEMIYA_LOG_SPAN, center + AMEMIYA_LOG_SPAN)
    return min(best, amemiya(1.0 / lux))


def l1_norm(f: OrliczFunction, w: Optional[Weight] = None) -> float:
    """‖f‖_{1,w} = Σ |f(x)|·w(x)·h(x)."""
    if f.is_zero:
        return 0.0
    a, h = _magnitudes(f, w)
    return math.fsum(a * h)


def _psi_evaluator(psi: YoungFunction, h_min: float) -> Tuple[ArrayFn, float]:
    """
    Vectorised Ψ together with v_max where Ψ(v_max)·h_min > 1.
    Numerically conjugated Ψ is tabulated once and interpolated linearly, which
    over-estimates a convex Ψ and keeps the oracle a lower bound.
    """
    v_max = 1.0
    while float(psi.values(np.array([v_max]))[0]) * h_min <= 1.0:
        v_max *= 2.0
        if v_max > 1e300:
            raise MethodInapplicableError("complementary function stays below 1/h on the whole range")
    if psi.family.kind != "conjugate":
        return psi.values, v_max
    grid = np.linspace(0.0, v_max, 4097)
    table = psi.values(grid)
    return (lambda v: np.interp(v, grid, table)), v_max


def dual_sup_norm(
    phi: YoungFunction,
    f: OrliczFunction,
    psi: Optional[YoungFunction] = None,
    resolution: Optional[int] = None,
    w: Optional[Weight] = None,
) -> float:
    """
    Brute-force sup{Σ |f v| h : Σ Ψ(|v|) h <= 1} over directions v on a simplex grid,
    each scaled to the constraint boundary by bisection. Supports of at most 4 points.
    """
    if f.is_zero:
        return 0.0
    a, h = _magnitudes(f, w)
    k = len(a)
    if k > 4:
        raise MethodInapplicableError("dual-sup oracle handles supports of at most 4 points", support_size=k)
    resolution = resolution or settings.DUAL_SUP_RESOLUTION
    psi = psi or conjugate(phi)
    evaluate, v_max = _psi_evaluator(psi, float(h.min()))

    # stars and bars: all compositions of ``resolution`` into k nonnegative parts
    directions = []
    for bars in combinations(range(resolution + k - 1), k - 1):
        edges = (-1,) + bars + (resolution + k - 1,)
        directions.append([edges[i + 1] - edges[i] - 1 for i in range(k)])
    u = np.array(directions, dtype=float) / resolution

    lo = np.zeros(len(u))
    hi = np.full(len(u), v_max * k)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        feasible = (evaluate(mid[:, None] * u) * h).sum(axis=1) <= 1.0
        lo = np.where(feasible, mid, lo)
        hi = np.where(feasible, hi, mid)
    values = lo * (u * a * h).sum(axis=1)
    best = float(values.max())
    logger.debug(f"dual-sup oracle over {len(u)} directions: {best:.12g}")
    return best


def holder_check(
    phi: YoungFunction,
    f: OrliczFunction,
    g: OrliczFunction,
    psi: Optional[YoungFunction] = None,
    slack_tol: float = 1e-6,
) -> HolderReport:
    """Σ|f g| h <= 2‖f‖_{Φ}‖g‖_{Ψ} with Luxemburg norms."""
    psi = psi or conjugate(phi)
    lhs = math.fsum(abs(v * g(x)) * float(f.hypergroup.haar(x)) for x, v in f.values.items())
    f_norm = luxemburg_norm(phi, f)
    g_norm = luxemburg_norm(psi, g)
    bound = 2.0 * f_norm * g_norm
    return HolderReport(
        lhs=lhs, f_norm=f_norm, g_norm=g_norm, bound=bound, slack=bound - lhs, passed=lhs <= bound + slack_tol
    )
