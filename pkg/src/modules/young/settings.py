from pydantic import BaseModel, Field, model_validator

from src.core.config import settings


class SearchParams(BaseModel):
    """
    Grid bounds and refinement depth for the one-dimensional searches of this module
    (conjugation, Δ₂ probing).
    """
    lo: float = Field(default_factory=lambda: settings.CONJUGATE_Y_MIN, gt=0)
    hi: float = Field(default_factory=lambda: settings.CONJUGATE_Y_MAX, gt=0)
    points: int = Field(default_factory=lambda: settings.CONJUGATE_GRID_POINTS, ge=8)
    refine_iterations: int = Field(default_factory=lambda: settings.CONJUGATE_REFINE_ITERATIONS, ge=0)
    tol: float = Field(default_factory=lambda: settings.CONJUGATE_TOL, gt=0)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _ordered(self) -> "SearchParams":
        if self.lo >= self.hi:
            raise ValueError("lo must be smaller than hi")
        return self

    @classmethod
    def delta2_default(cls) -> "SearchParams":
        return cls(lo=1e-6, hi=settings.DELTA2_T_MAX, points=settings.DELTA2_GRID_POINTS)
