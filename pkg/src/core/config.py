from typing import List, Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # App
    PROJECT_NAME: str = "orlicz-hypergroups"
    VERSION: str = "0.1.0"
    DEBUG: bool = False
    ENVIRONMENT: Literal["local", "dev", "prod"] = "local"

    # Reports
    SCHEMA_VERSION: str = "1.0"
    OUTPUT_DIR: str = "reports"

    # Young functions
    CONJUGATE_Y_MIN: float = 1e-9
    CONJUGATE_Y_MAX: float = 1e6
    CONJUGATE_GRID_POINTS: int = 256
    CONJUGATE_REFINE_ITERATIONS: int = 200
    CONJUGATE_TOL: float = 1e-10
    CONVEXITY_GRID_POINTS: int = 512
    CONVEXITY_H_SCALES: int = 8
    CONVEXITY_TOL: float = 1e-12
    CONVEXITY_X_MIN: float = 1e-6
    CONVEXITY_X_MAX: float = 1e3
    GROWTH_PROBE: float = 1e6
    GROWTH_BOUND: float = 1e3
    DELTA2_T_MAX: float = 1e8
    DELTA2_GRID_POINTS: int = 400
    DELTA2_TREND_FACTOR: float = 2.0
    SLOPE_ZERO_THRESHOLD: float = 1e-6
    SLOPE_STABILITY_TOL: float = 1e-3

    # Sequence condition
    SEQUENCE_HORIZON: int = 10_000
    DIVERGENCE_TARGET: float = 5.0
    TAIL_SLOPE_MARGIN: float = 1e-3
    TAIL_CUTOFF: int = 100_000

    # Hypergroups
    DEFAULT_WINDOW: int = 20
    HALO_FACTOR: int = 3
    ASSOCIATIVITY_WINDOW: int = 6
    TABLE_TOL: float = 1e-12
    APERIODIC_SCAN: int = 32

    # Norms
    NORM_TOL: float = 1e-12
    DUAL_SUP_RESOLUTION: int = 40

    # Counterexample / operators
    DIVERGENCE_SCHEDULE: List[int] = [100, 1_000, 10_000, 100_000]
    VANISH_EPSILON: float = 1e-6

    model_config = SettingsConfigDict(
        env_file=".env", case_sensitive=True, env_file_encoding="utf-8"
    )

settings = Settings()
