from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.config import settings
from src.core.exceptions import BoundaryError, DomainError, TableError

Number = Union[Fraction, float, complex]

ONE = Fraction(1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class FiniteMeasure:
    """Finitely supported measure Σ weights[i]·δ_{support[i]}."""
    support: Tuple[int, ...]
    weights: Tuple[Number, ...]

    def __post_init__(self) -> None:
        if len(self.support) != len(self.weights):
            raise DomainError("support and weights differ in length")
        if len(set(self.support)) != len(self.support):
            raise DomainError("support entries must be distinct", support=list(self.support))

    @classmethod
    def from_mapping(cls, masses: Mapping[int, Number]) -> "FiniteMeasure":
        items = sorted((x, m) for x, m in masses.items() if m != 0)
        return cls(tuple(x for x, _ in items), tuple(m for _, m in items))

    @classmethod
    def point(cls, x: int, mass: Number = ONE) -> "FiniteMeasure":
        return cls((x,), (mass,))

    def as_dict(self) -> Dict[int, Number]:
        return dict(zip(self.support, self.weights))

    def mass(self, x: int) -> Number:
        return self.as_dict().get(x, 0)

    @property
    def total_mass(self) -> Number:
        return sum(self.weights, Fraction(0))

    @property
    def total_variation(self) -> float:
        return float(sum(abs(m) for m in self.weights))

    def weighted_variation(self, w: Callable[[int], float]) -> float:
        """‖μ‖_w = Σ |μ({x})|·w(x)."""
        return float(sum(abs(m) * w(x) for x, m in zip(self.support, self.weights)))

    @property
    def is_probability(self) -> bool:
        tol = settings.TABLE_TOL
        real = all(not isinstance(m, complex) for m in self.weights)
        return (
            real
            and all(m >= -tol for m in self.weights)  # type: ignore[operator]
            and abs(self.total_mass - 1) <= tol
        )

    def scale(self, c: Number) -> "FiniteMeasure":
        return FiniteMeasure.from_mapping({x: c * m for x, m in zip(self.support, self.weights)})

    def __add__(self, other: "FiniteMeasure") -> "FiniteMeasure":
        masses = self.as_dict()
        for x, m in zip(other.support, other.weights):
            masses[x] = masses.get(x, 0) + m
        return FiniteMeasure.from_mapping(masses)

    def close_to(self, other: "FiniteMeasure", tol: float) -> bool:
        a, b = self.as_dict(), other.as_dict()
        return all(abs(a.get(x, 0) - b.get(x, 0)) <= tol for x in set(a) | set(b))


class DiscreteHypergroup(ABC):
    """
    A countable hypergroup given by its structure constants conv(x, y)({t}).

    ``window`` is the truncation on which checks quantify; ``halo`` is every point
    a computation may touch. Leaving the halo raises BoundaryError.
    """

    kind: str = "abstract"
    identity: int = 0
    is_group: bool = False
    finite: bool = False
    exact: bool = True

    def __init__(self, window: Sequence[int], halo: Union[range, FrozenSet[int]]):
        self.window = window
        self.halo = halo
        self._cache: Dict[Tuple[int, int], FiniteMeasure] = {}

    @property
    def name(self) -> str:
        return self.kind

    @property
    def commutative(self) -> bool:
        return True

    @abstractmethod
    def _structure(self, x: int, y: int) -> Dict[int, Number]:
        """Raw structure constants of δ_x ∗ δ_y for x, y in the halo."""

    @abstractmethod
    def _inv(self, x: int) -> int:
        ...

    @abstractmethod
    def _haar(self, x: int) -> Number:
        ...

    @abstractmethod
    def size(self, x: int) -> int:
        """Distance-like size used for balls and the enumeration order."""

    @abstractmethod
    def ball(self, radius: int) -> List[int]:
        """Halo points with size <= radius, in enumeration order."""

    def rank_key(self, x: int) -> Tuple[int, bool, int]:
        return self.size(x), x < 0, x

    def truncation(self) -> List[int]:
        """The window in enumeration order."""
        return sorted(self.window, key=self.rank_key)

    def enumerate(self, count: int) -> List[int]:
        return self.truncation()[:count]

    def require_halo(self, *points: int) -> None:
        for x in points:
            if x not in self.halo:
                raise BoundaryError(f"{x} lies outside the halo of {self.name}", point=x, hypergroup=self.name)

    def conv(self, x: int, y: int) -> FiniteMeasure:
        key = (x, y)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        self.require_halo(x, y)
        measure = FiniteMeasure.from_mapping(self._structure(x, y))
        for t in measure.support:
            if t not in self.halo:
                raise BoundaryError(
                    f"supp(δ_{x} ∗ δ_{y}) leaves the halo of {self.name}",
                    x=x, y=y, point=t, hypergroup=self.name,
                )
        if not self.is_group:
            self._cache[key] = measure
        return measure

    def inv(self, x: int) -> int:
        self.require_halo(x)
        return self._inv(x)

    def haar(self, x: int) -> Number:
        self.require_halo(x)
        return self._haar(x)

    def haar_mass(self, points: Iterable[int]) -> Number:
        return sum((self.haar(t) for t in points), Fraction(0))

    def act(self, a: int, y: int) -> int:
        """α(a, y): the single point of supp(δ_a ∗ δ_y) for central a."""
        support = self.conv(a, y).support
        if len(support) != 1:
            raise DomainError(f"δ_{a} ∗ δ_{y} is not a point mass; {a} is not central", a=a, y=y)
        return support[0]

    def power(self, a: int, n: int) -> int:
        """aⁿ for central a (negative n uses a⁻)."""
        base = a if n >= 0 else self.inv(a)
        x = self.identity
        for _ in range(abs(n)):
            x = self.act(base, x)
        return x

    def with_window(self, window: int) -> "DiscreteHypergroup":
        """Same structure on a larger truncation; finite carriers return themselves."""
        return self

    def describe(self) -> Dict[str, object]:
        return {"carrier": self.kind}


def _halo_radius(window: int, halo: Optional[int]) -> int:
    radius = halo if halo is not None else settings.HALO_FACTOR * window
    if window < 0 or radius < window:
        raise DomainError("window must be nonnegative and the halo at least as large", window=window, halo=radius)
    return radius


class IntegerGroup(DiscreteHypergroup):
    """(ℤ, +) with counting Haar measure."""

    kind = "integers"
    is_group = True

    def __init__(self, window: Optional[int] = None, halo: Optional[int] = None):
        self.radius = settings.DEFAULT_WINDOW if window is None else window
        self.halo_radius = _halo_radius(self.radius, halo)
        super().__init__(range(-self.radius, self.radius + 1), range(-self.halo_radius, self.halo_radius + 1))

    def _structure(self, x: int, y: int) -> Dict[int, Number]:
        return {x + y: ONE}

    def _inv(self, x: int) -> int:
        return -x

    def _haar(self, x: int) -> Number:
        return ONE

    def size(self, x: int) -> int:
        return abs(x)

    def ball(self, radius: int) -> List[int]:
        r = min(radius, self.halo_radius)
        points = [0]
        for n in range(1, r + 1):
            points += [n, -n]
        return points

    def with_window(self, window: int) -> "IntegerGroup":
        return IntegerGroup(window)

    def describe(self) -> Dict[str, object]:
        return {"carrier": self.kind, "window": self.radius, "halo": self.halo_radius}


class CyclicGroup(DiscreteHypergroup):
    """ℤ_m = {0, …, m−1} with addition mod m."""

    kind = "cyclic"
    is_group = True
    finite = True

    def __init__(self, m: int):
        if m < 1:
            raise DomainError(f"cyclic order must be >= 1, got {m}", m=m)
        self.m = m
        super().__init__(range(m), range(m))

    @property
    def name(self) -> str:
        return f"cyclic:{self.m}"

    def _structure(self, x: int, y: int) -> Dict[int, Number]:
        return {(x + y) % self.m: ONE}

    def _inv(self, x: int) -> int:
        return (-x) % self.m

    def _haar(self, x: int) -> Number:
        return ONE

    def size(self, x: int) -> int:
        return min(x, self.m - x)

    def rank_key(self, x: int) -> Tuple[int, bool, int]:
        # 0, 1, m-1, 2, m-2, ...
        return self.size(x), x > self.m - x, x

    def ball(self, radius: int) -> List[int]:
        return sorted((x for x in self.halo if self.size(x) <= radius), key=self.rank_key)

    def describe(self) -> Dict[str, object]:
        return {"carrier": self.name}


class ChebyshevHypergroup(DiscreteHypergroup):
    """
    Polynomial hypergroup of the Chebyshev polynomials on ℕ₀:
    δ_m ∗ δ_n = ½δ_{|m−n|} + ½δ_{m+n}, Haar weights h(0)=1, h(n)=2.
    """

    kind = "chebyshev"

    def __init__(self, window: Optional[int] = None, halo: Optional[int] = None):
        self.radius = settings.DEFAULT_WINDOW if window is None else window
        self.halo_radius = _halo_radius(self.radius, halo)
        super().__init__(range(0, self.radius + 1), range(0, self.halo_radius + 1))

    def _structure(self, x: int, y: int) -> Dict[int, Number]:
        if x == 0:
            return {y: ONE}
        if y == 0:
            return {x: ONE}
        return {abs(x - y): HALF, x + y: HALF}

    def _inv(self, x: int) -> int:
        return x

    def _haar(self, x: int) -> Number:
        return ONE if x == 0 else Fraction(2)

    def size(self, x: int) -> int:
        return x

    def ball(self, radius: int) -> List[int]:
        return list(range(0, min(radius, self.halo_radius) + 1))

    def with_window(self, window: int) -> "ChebyshevHypergroup":
        return ChebyshevHypergroup(window)

    def describe(self) -> Dict[str, object]:
        return {"carrier": self.kind, "window": self.radius, "halo": self.halo_radius}


class TableHypergroup(DiscreteHypergroup):
    """
    Structure constants read from an explicit table on finitely many points.
    conv is defined for pairs of table points; involution and Haar weights are
    defined on the table points and on every point their products reach.
    """

    kind = "table"
    finite = True

    def __init__(
        self,
        points: Sequence[int],
        table: Mapping[Tuple[int, int], Mapping[int, Number]],
        involution: Mapping[int, int],
        haar: Mapping[int, Number],
        identity: int = 0,
        tol: Optional[float] = None,
    ):
        self.points = tuple(sorted(set(points)))
        self.table = {key: dict(row) for key, row in table.items()}
        self.involution = dict(involution)
        self.haar_weights = dict(haar)
        self.identity = identity
        self.tol = settings.TABLE_TOL if tol is None else tol
        self.exact = all(isinstance(m, (int, Fraction)) for row in self.table.values() for m in row.values())
        reach = set(self.points) | {t for row in self.table.values() for t in row}
        self._order = {x: i for i, x in enumerate(sorted(reach | set(self.involution) | set(self.haar_weights)))}
        super().__init__(self.points, frozenset(self._order))

    @property
    def commutative(self) -> bool:
        return all(
            (y, x) not in self.table or self.table[(y, x)] == row for (x, y), row in self.table.items()
        )

    def _structure(self, x: int, y: int) -> Dict[int, Number]:
        row = self.table.get((x, y))
        if row is None:
            raise BoundaryError(f"({x}, {y}) is not a pair of table points", x=x, y=y, hypergroup=self.name)
        return row

    def _inv(self, x: int) -> int:
        if x not in self.involution:
            raise BoundaryError(f"involution undefined at {x}", point=x, hypergroup=self.name)
        return self.involution[x]

    def _haar(self, x: int) -> Number:
        if x not in self.haar_weights:
            raise BoundaryError(f"Haar weight undefined at {x}", point=x, hypergroup=self.name)
        return self.haar_weights[x]

    def size(self, x: int) -> int:
        return self._order[x]

    def rank_key(self, x: int) -> Tuple[int, bool, int]:
        return self._order[x], False, x

    def ball(self, radius: int) -> List[int]:
        return sorted((x for x in self._order if self._order[x] <= radius), key=self.rank_key)

    def validate_rows(self) -> None:
        """Row sums, signs and the involution; raises TableError."""
        if self.identity not in self.points:
            raise TableError(f"identity {self.identity} is not a table point", identity=self.identity)
        for (x, y), row in self.table.items():
            total = sum(row.values(), Fraction(0))
            if any(isinstance(m, complex) or m < -self.tol for m in row.values()):  # type: ignore[operator]
                raise TableError(f"negative or complex weight in conv({x}, {y})", x=x, y=y)
            if abs(total - 1) > self.tol:
                raise TableError(f"conv({x}, {y}) sums to {float(total)!r}, not 1", x=x, y=y, total=float(total))
        missing = [x for x in self.points if x not in self.involution]
        if missing:
            raise TableError("involution does not cover the table points", missing=missing)
        if sorted(self.involution.values()) != sorted(self.involution):
            raise TableError("involution is not a bijection on its domain")
        if any(self.involution.get(self.involution[x]) != x for x in self.involution):
            raise TableError("involution is not its own inverse")
        bad = [x for x, h in self.haar_weights.items() if not h > 0]
        if bad:
            raise TableError("Haar weights must be positive", points=bad)
