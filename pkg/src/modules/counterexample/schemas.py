from typing import List, Optional

from pydantic import BaseModel


class DivergenceRow(BaseModel):
    M: int
    x: int
    value: float
    lower_bound: float
    identity_holds: bool


class DivergenceReport(BaseModel):
    rows: List[DivergenceRow]
    identity_holds: bool
    increasing: bool
    label: str = "unbounded truncated partial sums; numeric evidence of (f ∗ g)(x) = ∞ on V"

    @property
    def passed(self) -> bool:
        return self.identity_holds and self.increasing


class ContrapositiveRow(BaseModel):
    hypergroup: str
    error: Optional[str] = None
    passed: bool
