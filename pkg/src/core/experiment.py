"""
Per-run experiment configuration: one JSON file plus command-line overrides.
"""
import argparse
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.core.config import settings
from src.core.exceptions import ConfigError
from src.core.reports import ReportWriter

YoungSpec = Dict[str, Any]


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    phi1: YoungSpec = Field(default_factory=lambda: {"family": "power", "params": {"p": 3.0}})
    phi2: YoungSpec = Field(default_factory=lambda: {"family": "power", "params": {"p": 3.0}})
    witness: Union[str, Dict[str, Any]] = "invsqrt"
    hypergroup: Dict[str, Any] = Field(default_factory=lambda: {"carrier": "integers"})

    # counterexample
    a: Optional[int] = 1
    U: List[int] = Field(default_factory=lambda: [-1, 0, 1])
    x_grid: List[int] = Field(default_factory=lambda: [0])
    schedule: List[int] = Field(default_factory=lambda: list(settings.DIVERGENCE_SCHEDULE))
    m_max: int = Field(default=12, ge=1)

    # norms / operators
    f: Optional[Dict[str, Any]] = None
    g: Dict[str, Any] = Field(default_factory=lambda: {"support": [0], "values": [1.0]})
    weight: Dict[str, Any] = Field(default_factory=lambda: {"kind": "unit"})
    norm: Literal["orlicz", "luxemburg"] = "orlicz"
    windows: Optional[List[int]] = None
    samples: int = Field(default=100, ge=1)

    horizon: int = Field(default_factory=lambda: settings.SEQUENCE_HORIZON, gt=0)
    window: int = Field(default_factory=lambda: settings.DEFAULT_WINDOW, gt=0)
    tol: float = Field(default_factory=lambda: settings.NORM_TOL, gt=0)
    epsilon: float = Field(default_factory=lambda: settings.VANISH_EPSILON, gt=0)
    seed: Optional[int] = None
    out: str = Field(default_factory=lambda: settings.OUTPUT_DIR)

    @field_validator("schedule", "windows")
    @classmethod
    def _positive(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is not None and any(v < 0 for v in value):
            raise ValueError("schedule and window entries must be nonnegative")
        return value


OVERRIDE_FLAGS = ("out", "tol", "window", "horizon", "seed")


def load_experiment(path: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """Read the JSON config (if any), apply non-None overrides and validate."""
    data: Dict[str, Any] = {}
    if path is not None:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read config {path}: {e}", path=str(path))
        if not isinstance(data, dict):
            raise ConfigError("Config root must be a JSON object", path=str(path))
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError("Config schema violation", errors=json.loads(e.json()))


def common_options() -> argparse.ArgumentParser:
    """
    Global flags, accepted before or after the sub-command.
    Defaults are suppressed so a flag given at one level is not reset by the other.
    """
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", type=Path, default=argparse.SUPPRESS, help="experiment JSON file")
    parent.add_argument("--out", type=str, default=argparse.SUPPRESS, help="report directory")
    parent.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    parent.add_argument("--window", type=int, default=argparse.SUPPRESS)
    parent.add_argument("--horizon", type=int, default=argparse.SUPPRESS)
    parent.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    parent.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return parent


@dataclass
class RunContext:
    """What a command handler gets besides its parsed arguments."""
    config: ExperimentConfig
    writer: ReportWriter

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunContext":
        overrides = {name: getattr(args, name, None) for name in OVERRIDE_FLAGS}
        config = load_experiment(getattr(args, "config", None), overrides)
        return cls(config=config, writer=ReportWriter(Path(config.out)))

    def rng(self) -> np.random.Generator:
        if self.config.seed is None:
            raise ConfigError("This action draws random samples; pass --seed or set 'seed' in the config")
        return np.random.default_rng(self.config.seed)
