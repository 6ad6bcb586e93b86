"""
Evaluation, construction, conjugation, Δ₂ and small-slope probes for Young functions.
"""
import math
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from src.core.config import settings
from src.core.exceptions import (
    ConvexityError,
    DegenerateFunctionError,
    DomainError,
    UnboundedOnRangeError,
)
from src.core.numerics import ArrayFn, log_grid, ternary_maximize
from src.modules.young.expression import compile_expression
from src.modules.young.models import Family, YoungFunction
from src.modules.young.schemas import ConvexityCertificate, Delta2Report, SlopeReport
from src.modules.young.settings import SearchParams

EPS = float(np.finfo(float).eps)
ROUNDING_ULPS = 8.0


def evaluate(phi: YoungFunction, x: float) -> float:
    """Φ(|x|); non-finite input is rejected."""
    return phi(x)


def certify_convexity(
    raw: ArrayFn,
    grid_points: Optional[int] = None,
    h_scales: Optional[int] = None,
    tol: Optional[float] = None,
) -> ConvexityCertificate:
    """
    Sample Φ(0) = 0, evenness, monotonicity on [0, ∞), second differences and growth.
    ``raw`` is evaluated on signed arguments so evenness is actually tested.
    """
    grid_points = grid_points or settings.CONVEXITY_GRID_POINTS
    h_scales = h_scales or settings.CONVEXITY_H_SCALES
    tol = settings.CONVEXITY_TOL if tol is None else tol

    x = log_grid(settings.CONVEXITY_X_MIN, settings.CONVEXITY_X_MAX, grid_points)
    with np.errstate(over="ignore", invalid="ignore"):
        at_zero = float(np.asarray(raw(np.zeros(1)))[0])
        pos = raw(x)
        neg = raw(-x)
        finite = np.isfinite(pos)

        zero_at_origin = at_zero == 0.0
        both = finite & np.isfinite(neg)
        even = bool(np.all(np.abs(pos[both] - neg[both]) <= tol * np.maximum(np.abs(pos[both]), 1.0)))

        fp = pos[finite]
        nondecreasing = bool(np.all(np.diff(fp) >= -tol * np.maximum(np.abs(fp[1:]), 1e-300))) and bool(
            np.all(fp >= 0)
        )

        worst = math.inf
        violation_x = violation_h = None
        for k in range(1, h_scales + 1):
            h = x * 2.0**-k
            left, mid, right = raw(x - h), pos, raw(x + h)
            second = left - 2.0 * mid + right
            scale = np.maximum(np.maximum(np.abs(left), np.abs(mid)), np.abs(right))
            # rounding floor: expressions like exp(x) - 1 lose absolute, not relative, accuracy near 0
            second = second + ROUNDING_ULPS * EPS * np.maximum(1.0, np.abs(left) + 2.0 * np.abs(mid) + np.abs(right))
            ok = np.isfinite(second) & (scale > 0)
            scaled = np.full_like(second, math.inf)
            scaled[ok] = second[ok] / scale[ok]
            i = int(np.argmin(scaled))
            if scaled[i] < worst:
                worst = float(scaled[i])
                if worst < -tol:
                    violation_x, violation_h = float(x[i]), float(h[i])

        probe = float(np.asarray(raw(np.array([settings.GROWTH_PROBE])))[0])
        grows = (not math.isfinite(probe) and probe > 0) or probe > settings.GROWTH_BOUND

    passed = zero_at_origin and even and nondecreasing and grows and worst >= -tol
    return ConvexityCertificate(
        passed=passed,
        zero_at_origin=zero_at_origin,
        even=even,
        nondecreasing=nondecreasing,
        grows_unboundedly=grows,
        min_scaled_second_difference=worst if math.isfinite(worst) else 0.0,
        grid_points=grid_points,
        h_scales=h_scales,
        violation_x=violation_x,
        violation_h=violation_h,
    )


def _certified(name: str, raw: ArrayFn, family: Family) -> YoungFunction:
    certificate = certify_convexity(raw)
    if not certificate.passed:
        logger.warning(f"Convexity certificate failed for {name}: {certificate.model_dump()}")
        raise ConvexityError(
            f"{name} is not a Young function on the sample grid",
            x=certificate.violation_x,
            h=certificate.violation_h,
            certificate=certificate.model_dump(),
        )
    # Φ(|x|): the certified raw function is even, so folding is exact
    return YoungFunction(name=name, evaluator=raw, family=family, certificate=certificate)


def _check_parameter(name: str, value: float, lower: float) -> None:
    if not math.isfinite(value) or value < lower:
        raise DomainError(f"{name} must be a finite number >= {lower}, got {value}", **{name: value})


def power(p: float) -> YoungFunction:
    """Φ_p(x) = |x|^p."""
    _check_parameter("p", p, 1.0)
    return _certified(
        f"Power({p:g})", lambda t: np.abs(t) ** p, Family(kind="power", p=float(p))
    )


def make_phi_p_gamma(p: float, gamma: float) -> YoungFunction:
    """Φ_{p,γ}(x) = |x|^p (ln(1+|x|))^γ."""
    _check_parameter("p", p, 1.0)
    _check_parameter("gamma", gamma, 0.0)

    def raw(t: np.ndarray) -> np.ndarray:
        a = np.abs(t)
        return a**p * np.log1p(a) ** gamma

    phi = _certified(
        f"PowerLog({p:g},{gamma:g})", raw, Family(kind="powerlog", p=float(p), gamma=float(gamma))
    )
    logger.debug(f"{phi.name}: Ω-member={phi.omega_member}")
    return phi


def custom(expression: str) -> YoungFunction:
    """Young function from the arithmetic grammar in the variable x."""
    raw = compile_expression(expression, "x")
    return _certified(f"Custom({expression})", raw, Family(kind="custom", expression=expression))


def complementary_array(
    phi: YoungFunction, xs: Sequence[float] | np.ndarray, search: Optional[SearchParams] = None
) -> np.ndarray:
    """
    Ψ(x) = sup_{y ≥ 0} (y|x| − Φ(y)) for every x at once.

    A coarse log grid in y locates the maximiser, then ternary refinement inside the
    neighbouring grid cells exploits concavity of y ↦ y|x| − Φ(y). Values are attained
    objective values, hence lower bounds of the supremum.
    """
    search = search or SearchParams()
    ax = np.abs(np.asarray(xs, dtype=float))
    if not np.all(np.isfinite(ax)):
        raise DomainError("Non-finite argument for the complementary function")
    flat = ax.reshape(-1)

    ys = np.concatenate(([0.0], log_grid(search.lo, search.hi, search.points)))
    phi_y = phi.values(ys)
    with np.errstate(over="ignore", invalid="ignore"):
        objective = flat[:, None] * ys[None, :] - phi_y[None, :]
    objective = np.where(np.isnan(objective), -np.inf, objective)
    idx = np.argmax(objective, axis=1)

    last = len(ys) - 1
    rows = np.arange(len(flat))
    unbounded = (idx == last) & (objective[rows, last] > objective[rows, last - 1])
    if unbounded.any():
        bad = float(flat[np.argmax(unbounded)])
        raise UnboundedOnRangeError(
            f"y|x| − Φ(y) still increasing at y_max={search.hi:g} for x={bad:g}",
            x=bad,
            y_max=search.hi,
        )

    best = objective[rows, idx]
    lo = ys[np.maximum(idx - 1, 0)]
    hi = ys[np.minimum(idx + 1, last)]

    def concave(y: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore", invalid="ignore"):
            v = flat * y - phi.values(y)
        return np.where(np.isnan(v), -np.inf, v)

    if search.refine_iterations:
        _, refined = ternary_maximize(concave, lo, hi, search.refine_iterations, rtol=1e-15)
        best = np.maximum(best, refined)
    best = np.where(flat == 0.0, 0.0, np.maximum(best, 0.0))
    return best.reshape(ax.shape)


def complementary(phi: YoungFunction, x: float, search: Optional[SearchParams] = None) -> float:
    if not math.isfinite(x):
        raise DomainError(f"Non-finite argument {x!r}", x=str(x))
    return float(complementary_array(phi, np.array([x]), search)[0])


def conjugate(phi: YoungFunction, search: Optional[SearchParams] = None) -> YoungFunction:
    """Ψ as a numerically evaluated YoungFunction (uncertified)."""
    search = search or SearchParams()
    return YoungFunction(
        name=f"Conj[{phi.name}]",
        evaluator=lambda t: complementary_array(phi, t, search),
        family=Family(kind="conjugate"),
        source=phi,
    )


def is_delta2(phi: YoungFunction, t0: float = 0.0, grid: Optional[SearchParams] = None) -> Delta2Report:
    """
    Probe Φ(2t) ≤ kΦ(t) for t ≥ t0 on a log grid.
    Power-type families also carry the exact asymptotic ratio 2^p.
    """
    if not math.isfinite(t0) or t0 < 0:
        raise DomainError(f"t0 must be finite and nonnegative, got {t0}", t0=t0)
    grid = grid or SearchParams.delta2_default()
    ts = log_grid(max(t0, grid.lo), max(grid.hi, 2 * max(t0, grid.lo)), grid.points)

    values = phi.values(ts)
    zero = values == 0.0
    if zero.any():
        t_bad = float(ts[np.argmax(zero)])
        raise DegenerateFunctionError(f"{phi.name}(t) = 0 at t={t_bad:g} > 0", t=t_bad)

    with np.errstate(over="ignore", invalid="ignore"):
        ratios = phi.values(2 * ts) / values

    asymptotic = None
    rule = None
    if phi.family.kind in ("power", "powerlog") and phi.family.p is not None:
        asymptotic, rule = 2.0**phi.family.p, "2^p"

    finite = np.isfinite(ratios)
    if not finite.all():
        i = int(np.argmin(finite))
        logger.info(f"Δ₂ refuted for {phi.name}: ratio overflows at t={ts[i]:g}")
        return Delta2Report(status="refutation", t0=t0, t_witness=float(ts[i]), trend=math.inf)

    tail = ratios[-max(len(ratios) // 4, 2):]
    trend = float(tail[-1] / tail[0])
    if trend > settings.DELTA2_TREND_FACTOR and np.all(np.diff(tail) >= 0):
        logger.info(f"Δ₂ refuted for {phi.name}: tail ratio grows by {trend:g}")
        return Delta2Report(
            status="refutation", t0=t0, t_witness=float(ts[int(np.argmax(ratios))]), trend=trend
        )

    return Delta2Report(
        status="certificate",
        t0=t0,
        k_estimate=float(ratios.max()),
        tail_ratio=float(ratios[-1]),
        asymptotic_ratio=asymptotic,
        asymptotic_rule=rule,
        trend=trend,
    )


def small_x_slope(phi: YoungFunction, eps_grid: Optional[Sequence[float]] = None) -> SlopeReport:
    """
    Estimate lim_{x→0+} Φ(x)/x. For convex Φ with Φ(0)=0 the ratio is nondecreasing
    in x, so the infimum over the grid estimates the limit.
    """
    xs = np.asarray(eps_grid if eps_grid is not None else log_grid(1.0, 1e-12, 25), dtype=float)
    if xs.size < 2 or np.any(xs <= 0) or np.any(np.diff(xs) >= 0):
        raise DomainError("eps_grid must be positive and strictly decreasing")

    ratios = phi.values(xs) / xs
    monotone = bool(np.all(np.diff(ratios) <= 1e-12 * np.maximum(np.abs(ratios[:-1]), 1.0)))
    infimum = float(ratios.min())

    if infimum < settings.SLOPE_ZERO_THRESHOLD:
        status = "zero"
    elif abs(ratios[-1] - ratios[-2]) <= settings.SLOPE_STABILITY_TOL * abs(ratios[-1]):
        status = "positive"
    else:
        status = "inconclusive"
    return SlopeReport(status=status, infimum=infimum, ratios=ratios.tolist(), monotone=monotone)
