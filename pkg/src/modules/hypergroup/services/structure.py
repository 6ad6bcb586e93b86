"""
Measure convolution, center, set translates and aperiodicity.
All center/aperiodicity answers are relative to the truncation they were computed on.
"""
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence

from loguru import logger

from src.core.config import settings
from src.core.exceptions import BoundaryError, DomainError
from src.modules.hypergroup.models import DiscreteHypergroup, FiniteMeasure, Number
from src.modules.hypergroup.schemas import AperiodicityResult, CenterReport


def convolve_measures(hypergroup: DiscreteHypergroup, mu: FiniteMeasure, nu: FiniteMeasure) -> FiniteMeasure:
    """μ ∗ ν = Σ_{x,y} μ({x}) ν({y}) · δ_x ∗ δ_y."""
    masses: Dict[int, Number] = {}
    for x, mx in zip(mu.support, mu.weights):
        for y, my in zip(nu.support, nu.weights):
            product = hypergroup.conv(x, y)
            for t, c in zip(product.support, product.weights):
                masses[t] = masses.get(t, 0) + mx * my * c
    return FiniteMeasure.from_mapping(masses)


def _window(hypergroup: DiscreteHypergroup, window: Optional[Sequence[int]]) -> List[int]:
    return list(window) if window is not None else hypergroup.truncation()


def is_central(hypergroup: DiscreteHypergroup, x: int, window: Optional[Sequence[int]] = None) -> bool:
    if hypergroup.is_group:
        hypergroup.require_halo(x)
        return True
    return all(len(hypergroup.conv(x, y).support) == 1 for y in _window(hypergroup, window))


def center(hypergroup: DiscreteHypergroup, window: Optional[Sequence[int]] = None) -> CenterReport:
    """Points x of the window with δ_x ∗ δ_y a point mass for every y of the window."""
    points = _window(hypergroup, window)
    elements = [x for x in points if all(len(hypergroup.conv(x, y).support) == 1 for y in points)]
    return CenterReport(hypergroup=hypergroup.name, elements=elements, window=points)


def translate_set(hypergroup: DiscreteHypergroup, x: int, E: Iterable[int]) -> FrozenSet[int]:
    """x ∗ E = ∪_{y ∈ E} supp(δ_x ∗ δ_y)."""
    return frozenset(t for y in E for t in hypergroup.conv(x, y).support)


def set_star(hypergroup: DiscreteHypergroup, E: Iterable[int], F: Iterable[int]) -> FrozenSet[int]:
    """E ∗ F = ∪_{t ∈ E} t ∗ F."""
    F = list(F)
    return frozenset().union(*(translate_set(hypergroup, t, F) for t in E))


def _require_central(hypergroup: DiscreteHypergroup, a: int, window: Optional[Sequence[int]]) -> None:
    if not is_central(hypergroup, a, window):
        raise DomainError(f"{a} is not in the computed center of {hypergroup.name}", a=a)


def iterate_translates(hypergroup: DiscreteHypergroup, a: int, E: Iterable[int]) -> Iterator[FrozenSet[int]]:
    """a∗E, a∗(a∗E), … using the single-point action of central a."""
    current = frozenset(E)
    while True:
        current = frozenset(hypergroup.act(a, t) for t in current)
        yield current


def is_aperiodic(
    hypergroup: DiscreteHypergroup,
    a: int,
    E: Iterable[int],
    n_max: Optional[int] = None,
    window: Optional[Sequence[int]] = None,
) -> AperiodicityResult:
    """
    Smallest N <= n_max with E ∩ aⁿE = ∅ for every n in [N, n_max], or Periodic when
    some aⁿE returns to E.

    Without an explicit ``n_max`` the scan stops at the last aⁿE inside the halo and
    reports that n as the bound; an explicit ``n_max`` that leaves the halo raises
    BoundaryError.
    """
    explicit = n_max is not None
    n_max = n_max or settings.APERIODIC_SCAN
    _require_central(hypergroup, a, window)
    base = frozenset(E)
    E_sorted = sorted(base)
    disjoint: List[bool] = []
    translates = iterate_translates(hypergroup, a, base)
    for n in range(1, n_max + 1):
        try:
            translate = next(translates)
        except BoundaryError:
            if explicit:
                raise
            logger.debug(f"aperiodicity scan of {a} clamped to n <= {n - 1} by the halo of {hypergroup.name}")
            n_max = n - 1
            break
        if translate == base:
            logger.debug(f"{a} is periodic on {E_sorted}: a^{n}E = E")
            return AperiodicityResult(status="periodic", a=a, E=E_sorted, n_max=n_max, period=n)
        disjoint.append(not (translate & base))

    if not disjoint or not disjoint[-1]:
        return AperiodicityResult(status="not_within_bound", a=a, E=E_sorted, n_max=n_max)
    N = n_max
    while N > 1 and disjoint[N - 2]:
        N -= 1
    return AperiodicityResult(status="found", a=a, E=E_sorted, n_max=n_max, N=N)


def center_invariance_check(
    hypergroup: DiscreteHypergroup, x: int, E: Iterable[int], window: Optional[Sequence[int]] = None
) -> bool:
    """λ(x ∗ E) = λ(E) for central x."""
    _require_central(hypergroup, x, window)
    E = list(E)
    lhs = hypergroup.haar_mass(translate_set(hypergroup, x, E))
    rhs = hypergroup.haar_mass(E)
    return abs(lhs - rhs) <= 1e-12 * max(1.0, abs(float(rhs)))


def element_order(
    hypergroup: DiscreteHypergroup, a: int, bound: Optional[int] = None, window: Optional[Sequence[int]] = None
) -> Optional[int]:
    """
    Smallest n >= 1 with aⁿ = e, or None when there is none up to ``bound`` (or, with
    the default bound, up to the last power inside the halo).
    """
    explicit = bound is not None
    bound = bound or settings.APERIODIC_SCAN
    _require_central(hypergroup, a, window)
    x = a
    for n in range(1, bound + 1):
        if x == hypergroup.identity:
            return n
        if n < bound:
            try:
                x = hypergroup.act(a, x)
            except BoundaryError:
                if explicit:
                    raise
                return None
    return None


def aperiodic_elements(
    hypergroup: DiscreteHypergroup,
    E: Iterable[int],
    n_max: Optional[int] = None,
    window: Optional[Sequence[int]] = None,
    limit: Optional[int] = None,
) -> List[int]:
    """Center elements (in enumeration order) that are aperiodic for E within n_max."""
    E = list(E)
    found: List[int] = []
    for a in center(hypergroup, window).elements:
        if a == hypergroup.identity:
            continue
        try:
            result = is_aperiodic(hypergroup, a, E, n_max, window)
        except BoundaryError:
            logger.debug(f"aperiodicity of {a} undecided: translates leave the halo")
            continue
        if result.aperiodic:
            found.append(a)
            if limit is not None and len(found) >= limit:
                break
    return found

