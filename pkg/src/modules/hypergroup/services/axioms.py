"""
Brute-force axiom validation of a hypergroup on a finite truncation.
"""
from itertools import product
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from src.core.config import settings
from src.modules.hypergroup.models import DiscreteHypergroup, FiniteMeasure
from src.modules.hypergroup.schemas import AxiomCheck, ValidationReport
from src.modules.hypergroup.services.structure import convolve_measures


def _first_failure(
    candidates: Iterable[Tuple[int, ...]], ok: Callable[..., bool]
) -> Optional[List[int]]:
    for candidate in candidates:
        if not ok(*candidate):
            return list(candidate)
    return None


def _check(name: str, witness: Optional[List[int]], detail: str) -> AxiomCheck:
    return AxiomCheck(name=name, passed=witness is None, witness=witness, detail="" if witness is None else detail)


def reflect(hypergroup: DiscreteHypergroup, measure: FiniteMeasure) -> FiniteMeasure:
    """μ⁻({t}) = μ({t⁻})."""
    return FiniteMeasure.from_mapping({hypergroup.inv(t): m for t, m in zip(measure.support, measure.weights)})


def validate_axioms(hypergroup: DiscreteHypergroup, window: Optional[Sequence[int]] = None) -> ValidationReport:
    """
    Check the hypergroup axioms on all pairs (and the first ASSOCIATIVITY_WINDOW
    points for triples) of the truncation. Every needed product must stay in the
    halo; otherwise BoundaryError propagates.
    """
    points = list(window) if window is not None else hypergroup.truncation()
    tol = settings.TABLE_TOL
    H = hypergroup
    e = H.identity
    pairs = list(product(points, points))

    probability = _first_failure(pairs, lambda x, y: H.conv(x, y).is_probability)

    delta = FiniteMeasure.point
    identity = _first_failure(
        ((x,) for x in points),
        lambda x: H.conv(e, x).close_to(delta(x), tol) and H.conv(x, e).close_to(delta(x), tol),
    )

    involution = _first_failure(((x,) for x in points), lambda x: H.inv(H.inv(x)) == x) or _first_failure(
        pairs, lambda x, y: reflect(H, H.conv(x, y)).close_to(H.conv(H.inv(y), H.inv(x)), tol)
    )

    identity_support = _first_failure(
        pairs, lambda x, y: (e in H.conv(x, y).support) == (x == H.inv(y))
    )

    triples_base = H.enumerate(settings.ASSOCIATIVITY_WINDOW) if window is None else points[: settings.ASSOCIATIVITY_WINDOW]

    def associative(x: int, y: int, z: int) -> bool:
        left = convolve_measures(H, H.conv(x, y), delta(z))
        right = convolve_measures(H, delta(x), H.conv(y, z))
        return left.close_to(right, tol)

    associativity = _first_failure(product(triples_base, repeat=3), associative)

    def invariant(z: int, t: int) -> bool:
        # t ∈ supp(δ_z ∗ δ_x) iff x ∈ supp(δ_{z⁻} ∗ δ_t)
        candidates = H.conv(H.inv(z), t).support
        total = sum(H.haar(x) * H.conv(z, x).mass(t) for x in candidates)
        return abs(total - H.haar(t)) <= tol * max(1.0, abs(float(H.haar(t))))

    haar = _first_failure(pairs, invariant)

    commutative = H.commutative and _first_failure(pairs, lambda x, y: H.conv(x, y).close_to(H.conv(y, x), tol)) is None

    report = ValidationReport(
        hypergroup=H.name,
        window=points,
        commutative=commutative,
        checks=[
            _check("probability", probability, "δ_x ∗ δ_y is not a probability measure"),
            _check("identity", identity, "δ_e ∗ δ_x ≠ δ_x or δ_x ∗ δ_e ≠ δ_x"),
            _check("involution", involution, "involution is not an anti-automorphism"),
            _check("identity_support", identity_support, "e ∈ supp(δ_x ∗ δ_y) does not match x = y⁻"),
            _check("associativity", associativity, "(δ_x ∗ δ_y) ∗ δ_z ≠ δ_x ∗ (δ_y ∗ δ_z)"),
            _check("haar", haar, "Σ_x h(x)(δ_z ∗ δ_x)({t}) ≠ h(t) for (z, t)"),
        ],
    )
    logger.info(f"Axiom validation of {H.name} on {len(points)} points: passed={report.passed}")
    return report
