from typing import List, Literal, Optional

from pydantic import BaseModel


class NormReport(BaseModel):
    kind: Literal["modular", "luxemburg", "orlicz", "dual_sup", "l1"]
    value: float
    tol: float
    weight: str = "unit"
    support_size: int
    evidence: str = "numeric"


class HolderReport(BaseModel):
    lhs: float
    f_norm: float
    g_norm: float
    bound: float
    slack: float
    passed: bool


class WeightCertificate(BaseModel):
    weight: str
    passed: bool
    positive: bool
    worst_ratio: float
    witness: Optional[List[int]] = None
    window: List[int]
    scope: str = "truncation-relative"
