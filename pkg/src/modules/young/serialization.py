"""
JSON forms: Young functions as {family, params} | {custom: expr} | {conjugate_of: spec},
sequence witnesses as {alpha, beta, tail_bound_method} or the alias "invsqrt".
"""
from typing import Any, Callable, Dict, List, Tuple, Union

from src.core.exceptions import ConfigError
from src.core.module_loader import loader
from src.modules.young.expression import compile_expression
from src.modules.young.models import SequenceRule, SequenceWitness, YoungFunction, inverse_sqrt_witness
from src.modules.young.services.calculus import conjugate, custom, make_phi_p_gamma, power


def _params(spec: Dict[str, Any]) -> Dict[str, Any]:
    params = spec.get("params", {})
    if not isinstance(params, dict):
        raise ConfigError("Young function 'params' must be an object", spec=spec)
    return params


def build_power(spec: Dict[str, Any]) -> YoungFunction:
    params = _params(spec)
    if "p" not in params:
        raise ConfigError("power family needs params.p", spec=spec)
    return power(float(params["p"]))


def build_powerlog(spec: Dict[str, Any]) -> YoungFunction:
    params = _params(spec)
    if "p" not in params:
        raise ConfigError("powerlog family needs params.p", spec=spec)
    return make_phi_p_gamma(float(params["p"]), float(params.get("gamma", 0.0)))


def build_custom(spec: Dict[str, Any]) -> YoungFunction:
    expression = spec.get("custom") or _params(spec).get("expr")
    if not isinstance(expression, str):
        raise ConfigError("custom Young function needs an expression string", spec=spec)
    return custom(expression)


FAMILY_BUILDERS: List[Tuple[str, Callable[[Dict[str, Any]], YoungFunction]]] = [
    ("power", build_power),
    ("powerlog", build_powerlog),
    ("custom", build_custom),
]


def young_from_spec(spec: Dict[str, Any]) -> YoungFunction:
    if not isinstance(spec, dict):
        raise ConfigError("Young function spec must be an object", spec=spec)
    if "conjugate_of" in spec:
        return conjugate(young_from_spec(spec["conjugate_of"]))
    if "custom" in spec:
        return build_custom(spec)
    loader.discover_and_load()
    return loader.young_families.build(str(spec.get("family")), spec)


def rule_from_spec(spec: Dict[str, Any]) -> SequenceRule:
    kind = spec.get("kind")
    if kind == "power":
        return SequenceRule(
            kind="power", scale=float(spec.get("scale", 1.0)), exponent=float(spec.get("exponent", 0.5))
        )
    if kind == "expression" and isinstance(spec.get("expr"), str):
        return SequenceRule(
            kind="expression", expression=spec["expr"], evaluator=compile_expression(spec["expr"], "n")
        )
    raise ConfigError("Sequence rule must be {kind: power, ...} or {kind: expression, expr}", spec=spec)


def witness_from_spec(spec: Union[str, Dict[str, Any], None]) -> SequenceWitness:
    if spec is None or spec == "invsqrt":
        return inverse_sqrt_witness()
    if isinstance(spec, str):
        raise ConfigError(f"Unknown witness alias '{spec}'", known=["invsqrt"])
    try:
        alpha = rule_from_spec(spec["alpha"])
        beta = rule_from_spec(spec.get("beta", spec["alpha"]))
    except KeyError:
        raise ConfigError("Witness spec needs an 'alpha' rule", spec=spec)
    method = spec.get("tail_bound_method", "integral_test")
    if method not in ("integral_test", "partial_sum_only"):
        raise ConfigError(f"Unknown tail_bound_method '{method}'", spec=spec)
    return SequenceWitness(alpha=alpha, beta=beta, tail_bound_method=method)
