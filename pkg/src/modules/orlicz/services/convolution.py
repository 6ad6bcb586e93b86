"""
Hypergroup convolution and left translation of finitely supported functions:
(f ∗ g)(x) = Σ_y f(y) g(y⁻ ∗ x) h(y),  g(y⁻ ∗ x) = Σ_t (δ_{y⁻} ∗ δ_x)({t}) g(t),
(L_z f)(x) = Σ_t (δ_z ∗ δ_x)({t}) f(t).
"""
from typing import Dict, Iterable, Tuple

from src.modules.hypergroup.models import DiscreteHypergroup
from src.modules.hypergroup.services.structure import set_star, translate_set
from src.modules.orlicz.models import OrliczFunction, Scalar


def smeared_value(hypergroup: DiscreteHypergroup, y: int, x: int, g: OrliczFunction) -> Scalar:
    """g(y⁻ ∗ x)."""
    product = hypergroup.conv(hypergroup.inv(y), x)
    total: Scalar = 0.0
    for t, c in zip(product.support, product.weights):
        value = g.values.get(t)
        if value is not None:
            total += c * value
    return total


def weighted_convolve_at(
    hypergroup: DiscreteHypergroup, coefficients: Iterable[Tuple[int, Scalar]], g: OrliczFunction, x: int
) -> Scalar:
    """Σ_y c_y · g(y⁻ ∗ x): shared by f ∗ g (c_y = f(y)h(y)) and μ ∗ g (c_y = μ({y}))."""
    total: Scalar = 0.0
    for y, c in coefficients:
        total += c * smeared_value(hypergroup, y, x, g)
    return total


def _coefficients(f: OrliczFunction) -> Iterable[Tuple[int, Scalar]]:
    H = f.hypergroup
    return [(y, v * H.haar(y)) for y, v in f.values.items()]


def convolve_at(hypergroup: DiscreteHypergroup, f: OrliczFunction, g: OrliczFunction, x: int) -> Scalar:
    """(f ∗ g)(x) at a single point."""
    return weighted_convolve_at(hypergroup, _coefficients(f), g, x)


def convolve(hypergroup: DiscreteHypergroup, f: OrliczFunction, g: OrliczFunction) -> OrliczFunction:
    # x contributes only if some t ∈ supp g lies in y⁻ ∗ x, i.e. x ∈ y ∗ t
    coefficients = _coefficients(f)
    candidates = sorted(set_star(hypergroup, f.support, g.support))
    values: Dict[int, Scalar] = {x: weighted_convolve_at(hypergroup, coefficients, g, x) for x in candidates}
    return OrliczFunction(hypergroup, values)


def translate(hypergroup: DiscreteHypergroup, z: int, f: OrliczFunction) -> OrliczFunction:
    """L_z f; on ℤ this is x ↦ f(z + x)."""
    candidates = sorted(translate_set(hypergroup, hypergroup.inv(z), f.support))
    values: Dict[int, Scalar] = {}
    for x in candidates:
        product = hypergroup.conv(z, x)
        values[x] = sum((c * f.values.get(t, 0.0) for t, c in zip(product.support, product.weights)), 0.0)
    return OrliczFunction(hypergroup, values)
