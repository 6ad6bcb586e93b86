import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Literal, Optional

import numpy as np

from src.core.exceptions import DomainError
from src.modules.young.schemas import ConvexityCertificate

ArrayFn = Callable[[np.ndarray], np.ndarray]

FamilyKind = Literal["power", "powerlog", "custom", "conjugate"]


@dataclass(frozen=True)
class Family:
    """Symbolic metadata of a Young function."""
    kind: FamilyKind
    p: Optional[float] = None
    gamma: Optional[float] = None
    expression: Optional[str] = None

    @property
    def exponent(self) -> Optional[float]:
        """Growth exponent p + γ of the power-type families near 0 and ∞ (up to logs)."""
        if self.kind == "power":
            return self.p
        if self.kind == "powerlog" and self.p is not None and self.gamma is not None:
            return self.p + self.gamma
        return None


@dataclass(frozen=True, eq=False)
class YoungFunction:
    """
    Φ restricted to [0, ∞) as a vectorised evaluator; Φ(x) is evaluator(|x|).
    ``certificate`` is None only for numerically derived functions (conjugates).
    """
    name: str
    evaluator: ArrayFn = field(repr=False)
    family: Family
    certificate: Optional[ConvexityCertificate] = None
    source: Optional["YoungFunction"] = field(default=None, repr=False)

    def values(self, x: Any) -> np.ndarray:
        a = np.abs(np.asarray(x, dtype=float))
        with np.errstate(over="ignore", invalid="ignore"):
            return np.asarray(self.evaluator(a), dtype=float)

    def __call__(self, x: float) -> float:
        if not math.isfinite(x):
            raise DomainError(f"Non-finite argument {x!r} for {self.name}", x=str(x))
        return float(self.values(np.array([x]))[0])

    @property
    def omega_member(self) -> bool:
        """(p, γ) ∈ Ω: p + γ > 2 and Φ_{p,γ} certified as a Young function."""
        exponent = self.family.exponent
        if exponent is None or self.family.kind not in ("power", "powerlog"):
            return False
        return exponent > 2 and self.certificate is not None and self.certificate.passed

    def to_spec(self) -> Dict[str, Any]:
        if self.family.kind == "power":
            return {"family": "power", "params": {"p": self.family.p}}
        if self.family.kind == "powerlog":
            return {"family": "powerlog", "params": {"p": self.family.p, "gamma": self.family.gamma}}
        if self.family.kind == "conjugate" and self.source is not None:
            return {"conjugate_of": self.source.to_spec()}
        return {"custom": self.family.expression}


SequenceKind = Literal["power", "expression"]


@dataclass(frozen=True, eq=False)
class SequenceRule:
    """
    Closed-form rule n ↦ a_n for n ≥ 1, extended to real n ≥ 1 for integral tests.
    ``power``: a_n = scale · n^(−exponent).
    """
    kind: SequenceKind
    scale: float = 1.0
    exponent: float = 0.5
    expression: Optional[str] = None
    evaluator: Optional[ArrayFn] = field(default=None, repr=False)

    def values(self, n: Any) -> np.ndarray:
        n = np.asarray(n, dtype=float)
        if self.kind == "power":
            return self.scale * n ** (-self.exponent)
        assert self.evaluator is not None
        return self.evaluator(n)

    def __call__(self, n: float) -> float:
        return float(self.values(np.array([n]))[0])

    def known_monotone(self) -> Optional[bool]:
        """Monotonicity (nonincreasing) when decidable from the closed form, else None."""
        if self.kind == "power":
            return self.exponent >= 0 and self.scale >= 0
        return None

    def to_spec(self) -> Dict[str, Any]:
        if self.kind == "power":
            return {"kind": "power", "scale": self.scale, "exponent": self.exponent}
        return {"kind": "expression", "expr": self.expression}


TailMethod = Literal["integral_test", "partial_sum_only"]


@dataclass(frozen=True)
class SequenceWitness:
    alpha: SequenceRule
    beta: SequenceRule
    tail_bound_method: TailMethod = "integral_test"

    def to_spec(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha.to_spec(),
            "beta": self.beta.to_spec(),
            "tail_bound_method": self.tail_bound_method,
        }


def inverse_sqrt_witness() -> SequenceWitness:
    """α_n = β_n = n^(−1/2)."""
    rule = SequenceRule(kind="power", scale=1.0, exponent=0.5)
    return SequenceWitness(alpha=rule, beta=rule)
