from typing import List, Literal, Optional

from pydantic import BaseModel

TRUNCATION_RELATIVE = "truncation-relative"


class AxiomCheck(BaseModel):
    name: str
    passed: bool
    witness: Optional[List[int]] = None
    detail: str = ""


class ValidationReport(BaseModel):
    hypergroup: str
    window: List[int]
    checks: List[AxiomCheck]
    commutative: bool
    scope: str = TRUNCATION_RELATIVE

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> AxiomCheck:
        return next(c for c in self.checks if c.name == name)


class CenterReport(BaseModel):
    hypergroup: str
    elements: List[int]
    window: List[int]
    scope: str = TRUNCATION_RELATIVE


class AperiodicityResult(BaseModel):
    """FoundN{N} | NotWithinBound | Periodic{period}."""
    status: Literal["found", "not_within_bound", "periodic"]
    a: int
    E: List[int]
    n_max: int
    N: Optional[int] = None
    period: Optional[int] = None
    scope: str = TRUNCATION_RELATIVE

    @property
    def aperiodic(self) -> bool:
        return self.status == "found"
