"""
T_g, T̃_g, the F_g criterion profile and the finite-rank gap.
"""
from typing import Iterable, List, Literal, Optional, Sequence, Union

from loguru import logger

from src.core.config import settings
from src.core.exceptions import DomainError, OrliczLabException
from src.modules.hypergroup.models import DiscreteHypergroup, FiniteMeasure
from src.modules.hypergroup.services.structure import set_star
from src.modules.operators.schemas import BoundCheck, CriterionProfile, Delta2Warning
from src.modules.orlicz.models import OrliczFunction, Weight, unit_weight
from src.modules.orlicz.services.convolution import convolve, translate, weighted_convolve_at
from src.modules.orlicz.services.norms import l1_norm, luxemburg_norm, orlicz_norm
from src.modules.young.models import YoungFunction
from src.modules.young.services.calculus import conjugate, is_delta2
from src.modules.young.settings import SearchParams

NormKind = Literal["orlicz", "luxemburg"]


def _norm(phi: YoungFunction, f: OrliczFunction, w: Weight, norm: NormKind) -> float:
    return orlicz_norm(phi, f, w) if norm == "orlicz" else luxemburg_norm(phi, f, w)


def apply_T(hypergroup: DiscreteHypergroup, g: OrliczFunction, f: OrliczFunction, w: Optional[Weight] = None) -> OrliczFunction:
    """T_g f = f ∗ g."""
    return convolve(hypergroup, f, g)


def apply_T_measure(
    hypergroup: DiscreteHypergroup, g: OrliczFunction, mu: FiniteMeasure, w: Optional[Weight] = None
) -> OrliczFunction:
    """T̃_g μ = μ ∗ g, (μ ∗ g)(x) = Σ_y μ({y}) g(y⁻ ∗ x)."""
    coefficients = list(zip(mu.support, mu.weights))
    candidates = sorted(set_star(hypergroup, mu.support, g.support))
    return OrliczFunction(
        hypergroup, {x: weighted_convolve_at(hypergroup, coefficients, g, x) for x in candidates}
    )


def criterion_value(
    hypergroup: DiscreteHypergroup,
    g: OrliczFunction,
    phi: YoungFunction,
    w: Optional[Weight] = None,
    x: int = 0,
    norm: NormKind = "orlicz",
) -> float:
    """F_g(x) = ‖w·L_x g‖_Φ / w(x)."""
    w = w or unit_weight()
    return _norm(phi, translate(hypergroup, x, g), w, norm) / w(x)


def bound_check(
    hypergroup: DiscreteHypergroup,
    g: OrliczFunction,
    f: OrliczFunction,
    phi: YoungFunction,
    w: Optional[Weight] = None,
    norm: NormKind = "orlicz",
    tol: float = 1e-9,
) -> BoundCheck:
    """
    Boundedness evidence for T_g: f ∗ g = Σ_y f(y)h(y)·L_{y⁻}g, so the triangle
    inequality gives ‖T_g f‖ <= sup_y (‖w·L_{y⁻}g‖/w(y))·‖f‖_{1,w}.
    """
    w = w or unit_weight()
    lhs = _norm(phi, apply_T(hypergroup, g, f, w), w, norm)
    constant = max(
        (_norm(phi, translate(hypergroup, hypergroup.inv(y), g), w, norm) / w(y) for y in f.support), default=0.0
    )
    l1 = l1_norm(f, w)
    rhs = constant * l1
    return BoundCheck(lhs=lhs, constant=constant, l1_norm=l1, rhs=rhs, passed=lhs <= rhs * (1 + tol) + tol)


def default_windows(probe_radius: int) -> List[int]:
    return sorted({r for r in (probe_radius // 8, probe_radius // 4, probe_radius // 2, 3 * probe_radius // 4) if r > 0})


def _tail_sup(points: Sequence[int], values: Sequence[float], inside: Iterable[int]) -> float:
    inside = set(inside)
    return max((v for x, v in zip(points, values) if x not in inside), default=0.0)


def criterion_profile(
    hypergroup: DiscreteHypergroup,
    g: OrliczFunction,
    phi: YoungFunction,
    w: Optional[Weight] = None,
    windows: Optional[Sequence[int]] = None,
    norm: NormKind = "orlicz",
    epsilon: Optional[float] = None,
    probe_radius: Optional[int] = None,
) -> CriterionProfile:
    """
    F_g on ball(probe_radius) and tail_sup_k = sup of F_g over ball(P) minus ball(W_k).
    VanishesNumerically when the last tail_sup is below ε; FailsToVanish when the tail
    is stable above ε and F_g is constant on it; Inconclusive otherwise.
    """
    w = w or unit_weight()
    epsilon = epsilon or settings.VANISH_EPSILON
    P = probe_radius if probe_radius is not None else getattr(hypergroup, "radius", settings.DEFAULT_WINDOW)
    points = hypergroup.ball(P)
    windows = sorted(set(windows)) if windows is not None else default_windows(P)
    if hypergroup.finite:
        # the largest window covers the whole carrier
        windows = sorted(set(windows) | {max(hypergroup.size(x) for x in hypergroup.halo)})
    elif not windows or windows[-1] >= P:
        raise DomainError(
            "criterion windows must be nonempty and strictly inside the probe radius",
            windows=list(windows),
            probe_radius=P,
        )

    values = [criterion_value(hypergroup, g, phi, w, x, norm) for x in points]
    tail_sups = [_tail_sup(points, values, hypergroup.ball(r)) for r in windows]

    certificates: List[str] = []
    final = tail_sups[-1] if tail_sups else 0.0
    if hypergroup.finite:
        verdict = "VanishesNumerically"
        certificates.append("finite carrier: vanishing at infinity is vacuous")
    elif final < epsilon:
        verdict = "VanishesNumerically"
    else:
        inner = set(hypergroup.ball(windows[0])) if windows else set()
        tail = [v for x, v in zip(points, values) if x not in inner]
        stable = len(tail_sups) >= 2 and abs(tail_sups[-1] - tail_sups[-2]) <= 1e-12 * max(1.0, tail_sups[-1])
        constant = bool(tail) and max(tail) - min(tail) <= 1e-12 * max(1.0, max(tail))
        if stable and constant:
            verdict = "FailsToVanish"
            certificates.append(f"F_g constant {tail[0]:.17g} on the tail")
            if hypergroup.is_group and w.name == "unit":
                certificates.append("translation isometry on a group with w ≡ 1")
        else:
            verdict = "Inconclusive"

    logger.info(f"criterion profile on {hypergroup.name} ({norm}): {verdict}, tail_sups={tail_sups}")
    return CriterionProfile(
        hypergroup=hypergroup.name,
        norm=norm,
        points=points,
        values=values,
        windows=list(windows),
        tail_sups=tail_sups,
        probe_radius=P,
        epsilon=epsilon,
        verdict=verdict,
        certificates=certificates,
    )


def finite_rank_gap(
    hypergroup: DiscreteHypergroup,
    g: OrliczFunction,
    phi: YoungFunction,
    w: Optional[Weight] = None,
    window: Union[int, Iterable[int]] = 0,
    norm: NormKind = "orlicz",
    probe_radius: Optional[int] = None,
) -> float:
    """
    sup_{x ∉ F} F_g(x) over the probe ball: the error of restricting T̃_g to point
    masses in F, measured on the normalised probes δ_x / w(x).
    """
    P = probe_radius if probe_radius is not None else getattr(hypergroup, "radius", settings.DEFAULT_WINDOW)
    F = set(hypergroup.ball(window)) if isinstance(window, int) else set(window)
    outside = [x for x in hypergroup.ball(P) if x not in F]
    return max((criterion_value(hypergroup, g, phi, w, x, norm) for x in outside), default=0.0)


def psi_delta2_warning(phi: YoungFunction, grid: Optional[SearchParams] = None) -> Delta2Warning:
    """Ψ ∈ Δ₂ is a hypothesis of the compactness criterion; reported, never enforced."""
    grid = grid or SearchParams(lo=1e-3, hi=1e3, points=64)
    try:
        report = is_delta2(conjugate(phi), grid=grid)
    except OrliczLabException as exc:
        logger.warning(f"Ψ ∈ Δ₂ undetermined for {phi.name}: {exc.detail}")
        return Delta2Warning(status="undetermined", warned=True, detail=exc.detail)
    if report.status == "refutation":
        logger.warning(f"Ψ = {phi.name}* fails Δ₂ on the probe grid (t ≈ {report.t_witness:g})")
        return Delta2Warning(status="refutation", warned=True, detail=f"ratio trend {report.trend}")
    return Delta2Warning(status="certificate", warned=False, detail=f"k ≈ {report.k_estimate}")
