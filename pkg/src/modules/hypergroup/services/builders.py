"""
Built-in hypergroups, user tables and their JSON form:
{carrier: "integers" | "cyclic:m" | "chebyshev" | "table", window, halo,
 table: [{x, y, support, weights}], involution: [[x, x⁻], ...], identity, haar: [[x, h], ...]}.
Weights may be numbers or exact fractions written as strings ("1/2").
"""
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

from loguru import logger

from src.core.exceptions import ConfigError, TableError
from src.core.module_loader import loader
from src.modules.hypergroup.models import (
    ChebyshevHypergroup,
    CyclicGroup,
    DiscreteHypergroup,
    IntegerGroup,
    Number,
    TableHypergroup,
)


def make_integers(window: Optional[int] = None, halo: Optional[int] = None) -> IntegerGroup:
    return IntegerGroup(window, halo)


def make_cyclic(m: int) -> CyclicGroup:
    return CyclicGroup(m)


def make_chebyshev(window: Optional[int] = None, halo: Optional[int] = None) -> ChebyshevHypergroup:
    return ChebyshevHypergroup(window, halo)


def _number(raw: Any) -> Number:
    if isinstance(raw, bool):
        raise TableError(f"weight {raw!r} is not a number")
    if isinstance(raw, (int, Fraction)):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except ValueError:
            raise TableError(f"weight {raw!r} is not a number")
    if isinstance(raw, float):
        return raw
    raise TableError(f"weight {raw!r} is not a number")


def _dump_number(value: Number) -> Union[str, float]:
    if isinstance(value, Fraction):
        return str(value)
    return float(value)  # type: ignore[arg-type]


def _pairs(raw: Any, label: str) -> List[Tuple[Any, Any]]:
    if not isinstance(raw, list) or not all(isinstance(p, list) and len(p) == 2 for p in raw):
        raise TableError(f"'{label}' must be a list of [point, value] pairs")
    return [(p[0], p[1]) for p in raw]


def make_from_table(spec: Dict[str, Any]) -> TableHypergroup:
    """Parse and row-check a user table; axiom validation is left to validate_axioms."""
    rows = spec.get("table")
    if not isinstance(rows, list) or not rows:
        raise TableError("table hypergroup needs a non-empty 'table'")
    table: Dict[Tuple[int, int], Dict[int, Number]] = {}
    points = set()
    for row in rows:
        try:
            x, y = int(row["x"]), int(row["y"])
            support = [int(t) for t in row["support"]]
            weights = [_number(m) for m in row["weights"]]
        except (KeyError, TypeError, ValueError) as e:
            raise TableError(f"malformed table row {row!r}: {e}")
        if len(support) != len(weights) or len(set(support)) != len(support):
            raise TableError(f"row ({x}, {y}) needs distinct support points, one weight each", x=x, y=y)
        if (x, y) in table:
            raise TableError(f"duplicate row ({x}, {y})", x=x, y=y)
        table[(x, y)] = dict(zip(support, weights))
        points.update((x, y))

    missing = [(x, y) for x in points for y in points if (x, y) not in table]
    if missing:
        raise TableError("table must define conv on every pair of its points", missing=missing[:10])

    involution = {int(x): int(v) for x, v in _pairs(spec.get("involution"), "involution")}
    haar = {int(x): _number(h) for x, h in _pairs(spec.get("haar"), "haar")}
    hypergroup = TableHypergroup(
        sorted(points), table, involution, haar, identity=int(spec.get("identity", 0)), tol=spec.get("tol")
    )
    hypergroup.validate_rows()
    logger.debug(f"Loaded table hypergroup on {len(points)} points (exact={hypergroup.exact})")
    return hypergroup


def tabulate(hypergroup: DiscreteHypergroup, points: Iterable[int]) -> Dict[str, Any]:
    """Export conv on all pairs of ``points`` in the JSON table form."""
    pts = sorted(set(points))
    rows = []
    reach = set(pts)
    for x in pts:
        for y in pts:
            measure = hypergroup.conv(x, y)
            reach.update(measure.support)
            rows.append(
                {"x": x, "y": y, "support": list(measure.support), "weights": [_dump_number(m) for m in measure.weights]}
            )
    ordered = sorted(reach)
    return {
        "carrier": "table",
        "identity": hypergroup.identity,
        "table": rows,
        "involution": [[t, hypergroup.inv(t)] for t in ordered],
        "haar": [[t, _dump_number(hypergroup.haar(t))] for t in ordered],
    }


def _integers(spec: Dict[str, Any]) -> DiscreteHypergroup:
    return make_integers(spec.get("window"), spec.get("halo"))


def _cyclic(spec: Dict[str, Any]) -> DiscreteHypergroup:
    if "m" not in spec:
        raise ConfigError("cyclic carrier needs an order m ('cyclic:m')", spec=spec)
    return make_cyclic(int(spec["m"]))


def _chebyshev(spec: Dict[str, Any]) -> DiscreteHypergroup:
    return make_chebyshev(spec.get("window"), spec.get("halo"))


HYPERGROUP_BUILDERS: List[Tuple[str, Callable[[Dict[str, Any]], DiscreteHypergroup]]] = [
    ("integers", _integers),
    ("cyclic", _cyclic),
    ("chebyshev", _chebyshev),
    ("table", make_from_table),
]


def parse_carrier(carrier: str) -> Dict[str, Any]:
    """'cyclic:5' -> {'carrier': 'cyclic', 'm': 5}."""
    name, _, arg = carrier.partition(":")
    spec: Dict[str, Any] = {"carrier": name}
    if arg:
        try:
            spec["m"] = int(arg)
        except ValueError:
            raise ConfigError(f"bad carrier '{carrier}'")
    return spec


def load_hypergroup(spec: Union[str, Dict[str, Any]], window: Optional[int] = None) -> DiscreteHypergroup:
    if isinstance(spec, str):
        spec = parse_carrier(spec)
    if not isinstance(spec, dict) or not isinstance(spec.get("carrier"), str):
        raise ConfigError("hypergroup spec needs a 'carrier' string", spec=spec)
    spec = {**parse_carrier(spec["carrier"]), **{k: v for k, v in spec.items() if k != "carrier"}}
    if window is not None and "window" not in spec:
        spec["window"] = window
    loader.discover_and_load()
    return loader.hypergroups.build(spec["carrier"], spec)


def dump_hypergroup(hypergroup: DiscreteHypergroup) -> Dict[str, Any]:
    if isinstance(hypergroup, TableHypergroup):
        return {**tabulate(hypergroup, hypergroup.points), "tol": hypergroup.tol}
    return hypergroup.describe()
