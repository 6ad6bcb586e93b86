from typing import List, Literal, Optional

from pydantic import BaseModel

Verdict = Literal["VanishesNumerically", "FailsToVanish", "Inconclusive"]


class CriterionProfile(BaseModel):
    hypergroup: str
    norm: Literal["orlicz", "luxemburg"]
    points: List[int]
    values: List[float]
    windows: List[int]
    tail_sups: List[float]
    probe_radius: int
    epsilon: float
    verdict: Verdict
    certificates: List[str] = []
    evidence: str = "finite enumeration windows; the limit itself is not claimed"


class BoundCheck(BaseModel):
    """‖T_g f‖_{Φ,w} <= C·‖f‖_{1,w} with C = sup_{y ∈ supp f} ‖w·L_{y⁻}g‖_Φ / w(y)."""
    lhs: float
    constant: float
    l1_norm: float
    rhs: float
    passed: bool


class Delta2Warning(BaseModel):
    status: Literal["certificate", "refutation", "undetermined"]
    warned: bool
    detail: Optional[str] = None
