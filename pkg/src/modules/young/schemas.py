from typing import List, Literal, Optional

from pydantic import BaseModel


class ConvexityCertificate(BaseModel):
    """Sampled evidence that a callable is a Young function."""
    passed: bool
    zero_at_origin: bool
    even: bool
    nondecreasing: bool
    grows_unboundedly: bool
    min_scaled_second_difference: float
    grid_points: int
    h_scales: int
    violation_x: Optional[float] = None
    violation_h: Optional[float] = None
    evidence: str = "sampled"


class Delta2Report(BaseModel):
    status: Literal["certificate", "refutation"]
    t0: float
    k_estimate: Optional[float] = None
    tail_ratio: Optional[float] = None
    asymptotic_ratio: Optional[float] = None
    asymptotic_rule: Optional[str] = None
    t_witness: Optional[float] = None
    trend: Optional[float] = None
    evidence: str = "numeric grid, not a proof"


class SlopeReport(BaseModel):
    status: Literal["positive", "zero", "inconclusive"]
    infimum: float
    ratios: List[float]
    monotone: bool


class SeriesSummary(BaseModel):
    partial_sum: float
    decay_exponent: Optional[float] = None
    exponent_source: Literal["closed_form", "numeric", "none"] = "none"
    tail_bound: Optional[float] = None
    convergent: Optional[bool] = None


class SequenceVerdict(BaseModel):
    verdict: Literal["satisfied", "witness_fails", "inconclusive"]
    horizon: int
    method: Literal["integral_test", "partial_sum_only"]
    phi1: SeriesSummary
    phi2: SeriesSummary
    product: SeriesSummary
    product_lower_bound: Optional[float] = None
    divergence_target: float
    reasons: List[str] = []
    evidence: str = "partial sums with integral-test bounds, not a proof"

    @property
    def satisfied(self) -> bool:
        return self.verdict == "satisfied"
