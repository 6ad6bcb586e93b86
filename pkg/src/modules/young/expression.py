"""
The small arithmetic grammar for custom Young functions and sequence rules:
numbers, one variable, + - * / ^, ln, abs, exp.
"""
from typing import Callable

import numpy as np
import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from src.core.exceptions import DomainError

ALLOWED_FUNCTIONS = (sympy.log, sympy.Abs, sympy.exp)

_GLOBALS = {
    "Integer": sympy.Integer,
    "Float": sympy.Float,
    "Rational": sympy.Rational,
    "Symbol": sympy.Symbol,
    "Function": sympy.Function,
}


def parse_expression(text: str, variable: str = "x") -> sympy.Expr:
    symbol = sympy.Symbol(variable, real=True)
    local = {variable: symbol, "ln": sympy.log, "abs": sympy.Abs, "exp": sympy.exp}
    try:
        expr = parse_expr(
            text,
            local_dict=local,
            global_dict=dict(_GLOBALS),
            transformations=standard_transformations + (convert_xor,),
        )
    except Exception as e:
        raise DomainError(f"Cannot parse expression '{text}': {e}", expression=text)

    if not isinstance(expr, sympy.Expr):
        raise DomainError(f"'{text}' is not an arithmetic expression", expression=text)
    extra = expr.free_symbols - {symbol}
    if extra:
        raise DomainError(
            f"Unknown symbols {sorted(str(s) for s in extra)} in '{text}'", expression=text
        )
    for fn in expr.atoms(sympy.Function):
        if not isinstance(fn, ALLOWED_FUNCTIONS):
            raise DomainError(f"Function '{fn.func}' is outside the grammar", expression=text)
    return expr


def compile_expression(text: str, variable: str = "x") -> Callable[[np.ndarray], np.ndarray]:
    """Parse and lambdify to a vectorised numpy callable."""
    expr = parse_expression(text, variable)
    fn = sympy.lambdify(sympy.Symbol(variable, real=True), expr, modules="numpy")

    def evaluate(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return np.broadcast_to(np.asarray(fn(t), dtype=float), t.shape).copy()

    return evaluate
