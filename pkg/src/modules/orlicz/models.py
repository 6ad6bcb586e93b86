import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np

from src.core.exceptions import ConfigError, DomainError
from src.modules.hypergroup.models import DiscreteHypergroup

Scalar = Union[float, complex]


def _clean(value: Any) -> Scalar:
    v = value if isinstance(value, complex) else float(value)
    if not cmath.isfinite(v):
        raise DomainError(f"non-finite function value {value!r}")
    return v


@dataclass(frozen=True, eq=False)
class OrliczFunction:
    """A finitely supported function on the carrier of ``hypergroup``."""
    hypergroup: DiscreteHypergroup = field(repr=False)
    values: Mapping[int, Scalar]

    def __post_init__(self) -> None:
        cleaned = {int(x): _clean(v) for x, v in sorted(self.values.items()) if v != 0}
        self.hypergroup.require_halo(*cleaned)
        object.__setattr__(self, "values", cleaned)

    @classmethod
    def indicator(cls, hypergroup: DiscreteHypergroup, points: Iterable[int], value: Scalar = 1.0) -> "OrliczFunction":
        return cls(hypergroup, {x: value for x in points})

    @classmethod
    def identity_delta(cls, hypergroup: DiscreteHypergroup) -> "OrliczFunction":
        """The point function at e with value 1/h(e), the unit of convolution."""
        e = hypergroup.identity
        return cls(hypergroup, {e: 1.0 / float(hypergroup.haar(e))})

    @classmethod
    def from_spec(cls, hypergroup: DiscreteHypergroup, spec: Mapping[str, Any]) -> "OrliczFunction":
        """{support: [points], values: [real | [re, im]]}."""
        try:
            support = [int(x) for x in spec["support"]]
            raw = list(spec["values"])
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"function spec needs 'support' and 'values': {e}")
        if len(raw) != len(support) or len(set(support)) != len(support):
            raise ConfigError("function spec needs distinct support points, one value each")
        values = [complex(v[0], v[1]) if isinstance(v, (list, tuple)) else float(v) for v in raw]
        return cls(hypergroup, dict(zip(support, values)))

    def to_spec(self) -> Dict[str, List[Any]]:
        return {
            "support": list(self.support),
            "values": [[v.real, v.imag] if isinstance(v, complex) else v for v in self.values.values()],
        }

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values

    def __call__(self, x: int) -> Scalar:
        return self.values.get(x, 0.0)

    def abs_array(self) -> np.ndarray:
        return np.abs(np.array(list(self.values.values()), dtype=complex))

    def haar_array(self) -> np.ndarray:
        return np.array([float(self.hypergroup.haar(x)) for x in self.values], dtype=float)

    def scale(self, c: Scalar) -> "OrliczFunction":
        return OrliczFunction(self.hypergroup, {x: c * v for x, v in self.values.items()})

    def __add__(self, other: "OrliczFunction") -> "OrliczFunction":
        values = dict(self.values)
        for x, v in other.values.items():
            values[x] = values.get(x, 0.0) + v
        return OrliczFunction(self.hypergroup, values)

    def __sub__(self, other: "OrliczFunction") -> "OrliczFunction":
        return self + other.scale(-1.0)

    def close_to(self, other: "OrliczFunction", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        points = set(self.values) | set(other.values)
        return all(abs(self(x) - other(x)) <= atol + rtol * max(abs(self(x)), abs(other(x))) for x in points)


@dataclass(frozen=True)
class Weight:
    """Positive weight w on the carrier; submultiplicativity is certified per truncation."""
    name: str
    fn: Callable[[int], float] = field(repr=False, compare=False)
    params: Dict[str, float] = field(default_factory=dict)

    def __call__(self, x: int) -> float:
        return float(self.fn(x))

    def array(self, points: Iterable[int]) -> np.ndarray:
        return np.array([self(x) for x in points], dtype=float)

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": self.name, **self.params}


def unit_weight() -> Weight:
    return Weight("unit", lambda x: 1.0)


def exponential_weight(rate: float = 1.0) -> Weight:
    """w(x) = e^{rate·|x|}."""
    if not math.isfinite(rate) or rate < 0:
        raise DomainError(f"rate must be finite and nonnegative, got {rate}")
    return Weight("exponential", lambda x: math.exp(rate * abs(x)), {"rate": rate})


def polynomial_weight(s: float = 1.0) -> Weight:
    """w(x) = (1+|x|)^s."""
    if not math.isfinite(s) or s < 0:
        raise DomainError(f"s must be finite and nonnegative, got {s}")
    return Weight("polynomial", lambda x: (1.0 + abs(x)) ** s, {"s": s})


def weight_from_spec(spec: Optional[Mapping[str, Any]]) -> Weight:
    spec = dict(spec or {"kind": "unit"})
    kind = spec.pop("kind", "unit")
    try:
        if kind == "unit":
            return unit_weight()
        if kind == "exponential":
            return exponential_weight(float(spec.get("rate", 1.0)))
        if kind == "polynomial":
            return polynomial_weight(float(spec.get("s", 1.0)))
    except (TypeError, ValueError) as e:
        raise ConfigError(f"bad weight parameters: {e}", spec=spec)
    raise ConfigError(f"Unknown weight kind '{kind}'", known=["unit", "exponential", "polynomial"])
