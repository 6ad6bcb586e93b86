"""
Sequence-condition checks: ΣΦ₁(α_n) < ∞, ΣΦ₂(β_n) < ∞ and Σα_nβ_n = ∞.
"""
import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from loguru import logger

from src.core.config import settings
from src.core.exceptions import DomainError, MethodInapplicableError
from src.core.numerics import decay_exponent, integral, integral_tail
from src.modules.young.models import SequenceRule, SequenceWitness, YoungFunction, inverse_sqrt_witness
from src.modules.young.schemas import SequenceVerdict, SeriesSummary
from src.modules.young.services.calculus import power


def _indices(horizon: int) -> np.ndarray:
    return np.arange(1, horizon + 1, dtype=float)


def _require_nonnegative(rule: SequenceRule, terms: np.ndarray, label: str) -> None:
    if np.any(~np.isfinite(terms)) or np.any(terms < 0):
        raise DomainError(f"{label} has negative or non-finite terms", rule=rule.to_spec())


def is_nonincreasing(rule: SequenceRule, horizon: int) -> bool:
    known = rule.known_monotone()
    if known is not None:
        return known
    # sampled on integers and on a log grid of real arguments (used by the integral test)
    samples = np.concatenate((_indices(min(horizon, 10_000)), np.geomspace(1.0, 1e12, 400)))
    samples.sort()
    values = rule.values(samples)
    return bool(np.all(np.diff(values) <= 1e-15 * np.maximum(np.abs(values[:-1]), 1e-300)))


def closed_form_exponent(phi: YoungFunction, rule: SequenceRule) -> Optional[float]:
    """
    Decay exponent of n ↦ Φ(c n^{-s}) for power-type Φ and power rules: s·(p+γ),
    since ln(1+u)^γ ~ u^γ as u → 0.
    """
    exponent = phi.family.exponent
    if exponent is None or rule.kind != "power" or rule.exponent <= 0 or rule.scale <= 0:
        return None
    return rule.exponent * exponent


def _phi_of_rule(phi: YoungFunction, rule: SequenceRule) -> Callable[[float], float]:
    return lambda x: float(phi.values(rule.values(np.array([x])))[0])


def analytic_tail(phi: YoungFunction, rule: SequenceRule) -> Optional[Callable[[float], float]]:
    """∫_x^∞ (c·t^{-s})^p dt = c^p·x^{1-ps} / (ps-1) for Φ = |x|^p and a_n = c·n^{-s}, ps > 1."""
    p = phi.family.p
    if phi.family.kind != "power" or p is None or rule.kind != "power" or rule.scale <= 0:
        return None
    ps = p * rule.exponent
    if ps <= 1.0:
        return None
    return lambda x: rule.scale**p * x ** (1.0 - ps) / (ps - 1.0)


def _series_summary(
    partial: float,
    term: Callable[[float], float],
    horizon: int,
    exponent: Optional[float],
    integral_test: bool,
    exact_tail: Optional[Callable[[float], float]] = None,
) -> SeriesSummary:
    source = "closed_form" if exponent is not None else "none"
    if exponent is None and integral_test:
        exponent = decay_exponent(term, float(horizon))
        source = "numeric"
    if exponent is None:
        return SeriesSummary(partial_sum=partial)

    margin = settings.TAIL_SLOPE_MARGIN
    convergent: Optional[bool]
    if exponent > 1.0 + (0.0 if source == "closed_form" else margin):
        convergent = True
    elif exponent <= 1.0 + 1e-9:
        convergent = False
    else:
        convergent = None

    tail = None
    if convergent and integral_test:
        if exact_tail is not None:
            tail = exact_tail(float(horizon))
        else:
            value, abserr = integral_tail(term, float(horizon))
            tail = value + abserr
    return SeriesSummary(
        partial_sum=partial,
        decay_exponent=exponent,
        exponent_source=source,
        tail_bound=tail,
        convergent=convergent,
    )


def check_sequence_condition(
    phi1: YoungFunction,
    phi2: YoungFunction,
    witness: Optional[SequenceWitness] = None,
    horizon: Optional[int] = None,
    divergence_target: Optional[float] = None,
) -> SequenceVerdict:
    """
    Partial sums to the horizon M, integral-test tail bounds for monotone rules,
    and a lower bound ∫_1^{M+1} α(x)β(x) dx ≤ Σ_{n≤M} α_nβ_n for the product series.
    """
    witness = witness or inverse_sqrt_witness()
    horizon = horizon or settings.SEQUENCE_HORIZON
    target = settings.DIVERGENCE_TARGET if divergence_target is None else divergence_target
    if horizon < 1:
        raise DomainError("horizon must be positive", horizon=horizon)

    n = _indices(horizon)
    alpha = witness.alpha.values(n)
    beta = witness.beta.values(n)
    _require_nonnegative(witness.alpha, alpha, "alpha")
    _require_nonnegative(witness.beta, beta, "beta")

    integral_test = witness.tail_bound_method == "integral_test"
    if integral_test:
        for label, rule in (("alpha", witness.alpha), ("beta", witness.beta)):
            if not is_nonincreasing(rule, horizon):
                raise MethodInapplicableError(
                    f"Integral test needs a nonincreasing {label} rule", rule=rule.to_spec()
                )

    s1 = float(np.sum(phi1.values(alpha)))
    s2 = float(np.sum(phi2.values(beta)))
    prod = float(np.sum(alpha * beta))

    summary1 = _series_summary(
        s1,
        _phi_of_rule(phi1, witness.alpha),
        horizon,
        closed_form_exponent(phi1, witness.alpha),
        integral_test,
        analytic_tail(phi1, witness.alpha),
    )
    summary2 = _series_summary(
        s2,
        _phi_of_rule(phi2, witness.beta),
        horizon,
        closed_form_exponent(phi2, witness.beta),
        integral_test,
        analytic_tail(phi2, witness.beta),
    )

    product_exponent = None
    if witness.alpha.kind == "power" and witness.beta.kind == "power":
        product_exponent = witness.alpha.exponent + witness.beta.exponent
    product_term = lambda x: witness.alpha(x) * witness.beta(x)
    product = _series_summary(prod, product_term, horizon, product_exponent, integral_test)

    lower_bound = None
    if integral_test:
        lower_bound = _product_lower_bound(product_term, horizon)

    reasons: List[str] = []
    verdict = "inconclusive"
    if summary1.convergent is False:
        reasons.append("ΣΦ₁(α_n) diverges")
    if summary2.convergent is False:
        reasons.append("ΣΦ₂(β_n) diverges")
    if product.convergent is True:
        reasons.append("Σα_nβ_n converges")
    if reasons:
        verdict = "witness_fails"
    elif not integral_test:
        reasons.append("tails not certified (partial sums only)")
    elif summary1.tail_bound is None or summary2.tail_bound is None:
        reasons.append("tail bounds could not be certified")
    elif product.convergent is not False:
        reasons.append("divergence of Σα_nβ_n not established")
    elif prod < target or lower_bound is None or lower_bound < target:
        reasons.append(f"Σα_nβ_n below divergence target {target:g} at horizon {horizon}")
    else:
        verdict = "satisfied"

    result = SequenceVerdict(
        verdict=verdict,
        horizon=horizon,
        method=witness.tail_bound_method,
        phi1=summary1,
        phi2=summary2,
        product=product,
        product_lower_bound=lower_bound,
        divergence_target=target,
        reasons=reasons,
    )
    logger.info(f"Sequence condition ({phi1.name}, {phi2.name}) at M={horizon}: {verdict}")
    return result


def _product_lower_bound(term: Callable[[float], float], horizon: int) -> float:
    # split on decades so quad resolves slowly decaying integrands
    edges = np.unique(np.concatenate(([1.0], np.geomspace(1.0, horizon + 1.0, 16), [horizon + 1.0])))
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        value, abserr = integral(term, float(a), float(b))
        total += value - abserr
    return total


def tail_bounds(phi: YoungFunction, rule: SequenceRule, cutoff: Optional[int] = None) -> np.ndarray:
    """
    Certified upper bounds T[k] ≥ Σ_{n ≥ k+1} Φ(a_n), k = 0..cutoff−1:
    exact partial sums up to the cutoff plus ∫_{cutoff}^∞ Φ(a(x)) dx (integral test,
    valid for nonincreasing n ↦ Φ(a_n)). Entries are +inf when the tail diverges.
    """
    cutoff = cutoff or settings.TAIL_CUTOFF
    if not is_nonincreasing(rule, cutoff):
        raise MethodInapplicableError("Integral test needs a nonincreasing rule", rule=rule.to_spec())
    terms = phi.values(rule.values(_indices(cutoff)))
    term = _phi_of_rule(phi, rule)
    summary = _series_summary(
        float(terms.sum()), term, cutoff, closed_form_exponent(phi, rule), True, analytic_tail(phi, rule)
    )
    if not summary.convergent or summary.tail_bound is None:
        return np.full(cutoff, math.inf)
    # the integral over [cutoff, ∞) bounds Σ_{n > cutoff}
    suffix = np.cumsum(terms[::-1])[::-1]
    return suffix + summary.tail_bound


def lebesgue_pair_check(p: float, q: float, horizon: Optional[int] = None) -> Tuple[SequenceVerdict, bool]:
    """
    (|x|^p, |x|^q) with α_n = β_n = n^{-1/2}: satisfied exactly when p, q > 2.
    Returns the verdict and whether it agrees with that prediction.
    """
    verdict = check_sequence_condition(power(p), power(q), inverse_sqrt_witness(), horizon)
    expected = p > 2 and q > 2
    return verdict, verdict.satisfied == expected
