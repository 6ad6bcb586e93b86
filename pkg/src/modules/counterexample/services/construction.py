"""
Proof objects of the divergence construction: V with V ∗ V ⊆ U, the separation
integer N, the tail start N′ and the block functions f_M, g_M.
"""
from collections import Counter
from typing import Iterable, List, Optional, Sequence

import numpy as np
from loguru import logger

from src.core.config import settings
from src.core.exceptions import (
    CertificateError,
    DomainError,
    NoAperiodicElementError,
    NotFoundWithinBoundError,
    OrliczLabException,
)
from src.modules.counterexample.models import Block, CounterexampleInstance
from src.modules.counterexample.schemas import ContrapositiveRow
from src.modules.hypergroup.models import DiscreteHypergroup
from src.modules.hypergroup.services.builders import make_chebyshev, make_cyclic
from src.modules.hypergroup.services.structure import (
    aperiodic_elements,
    is_aperiodic,
    is_central,
    set_star,
    translate_set,
)
from src.modules.orlicz.services.norms import modular
from src.modules.young.models import SequenceWitness, YoungFunction, inverse_sqrt_witness
from src.modules.young.services.calculus import power
from src.modules.young.services.sequence import check_sequence_condition, tail_bounds


def _require_symmetric_neighbourhood(hypergroup: DiscreteHypergroup, U: Iterable[int]) -> frozenset:
    U = frozenset(U)
    if hypergroup.identity not in U:
        raise DomainError("U must contain the identity", U=sorted(U))
    if frozenset(hypergroup.inv(u) for u in U) != U:
        raise DomainError("U must be symmetric", U=sorted(U))
    return U


def find_V(hypergroup: DiscreteHypergroup, U: Iterable[int]) -> frozenset:
    """
    Symmetric V ⊆ U containing e with V ∗ V ⊆ U, by greedy shrinking: while some
    product leaves U, drop the highest-ranked offending point and its inverse.
    """
    U = _require_symmetric_neighbourhood(hypergroup, U)
    e = hypergroup.identity
    V = set(U)
    while True:
        offenders = set()
        for x in V:
            for y in V:
                if not set(hypergroup.conv(x, y).support) <= U:
                    offenders.update((x, y))
        offenders.discard(e)
        if not offenders:
            return frozenset(V)
        victim = max(offenders, key=hypergroup.rank_key)
        V -= {victim, hypergroup.inv(victim)}
        logger.debug(f"find_V: dropped {victim} (and its inverse)")


def find_N(
    hypergroup: DiscreteHypergroup,
    a: int,
    U: Iterable[int],
    scan_bound: Optional[int] = None,
    window: Optional[Sequence[int]] = None,
) -> int:
    """Smallest N with U ∩ aⁿU = ∅ and U ∩ a⁻ⁿU = ∅ for all n in [N, scan_bound]."""
    U = list(U)
    found = []
    for element in (a, hypergroup.inv(a)):
        result = is_aperiodic(hypergroup, element, U, scan_bound, window)
        if result.status == "periodic":
            raise NoAperiodicElementError(f"{element} is periodic on U (period {result.period})", a=element)
        if result.status == "not_within_bound":
            raise NotFoundWithinBoundError(
                f"U ∩ {element}ⁿU ≠ ∅ at the scan bound {result.n_max}", a=element, scan_bound=result.n_max
            )
        found.append(result.N)
    return max(found)  # type: ignore[type-var]


def required_window(hypergroup: DiscreteHypergroup, a: int, U: Iterable[int], N: int, M: int) -> int:
    """Truncation radius that holds a^{±nN} ∗ V ∗ V for n <= M (size is subadditive on groups)."""
    spread = max(hypergroup.size(u) for u in U)
    return M * N * max(hypergroup.size(a), 1) + 2 * spread + 1


def sized_for(
    hypergroup: DiscreteHypergroup,
    U: Iterable[int],
    M: int,
    a: Optional[int] = None,
    scan_bound: Optional[int] = None,
) -> DiscreteHypergroup:
    """The same hypergroup on a truncation large enough for blocks up to M."""
    U = list(U)
    a = _select_element(hypergroup, U, a, scan_bound)
    U = sorted(_require_symmetric_neighbourhood(hypergroup, U), key=hypergroup.rank_key)
    N = find_N(hypergroup, a, U, scan_bound, _gate_window(hypergroup))
    radius = max(getattr(hypergroup, "radius", 0), required_window(hypergroup, a, U, N, M))
    return hypergroup.with_window(radius)


def _gate_window(hypergroup: DiscreteHypergroup) -> List[int]:
    return hypergroup.ball(settings.DEFAULT_WINDOW)


def _select_element(
    hypergroup: DiscreteHypergroup, U: Sequence[int], a: Optional[int], scan_bound: Optional[int]
) -> int:
    window = _gate_window(hypergroup)
    candidates = aperiodic_elements(hypergroup, U, scan_bound, window=window, limit=1)
    if not candidates:
        raise NoAperiodicElementError(
            f"{hypergroup.name} has no aperiodic center element on its truncation", hypergroup=hypergroup.name
        )
    if a is None:
        return candidates[0]
    if not is_central(hypergroup, a, window):
        raise DomainError(f"{a} is not in the computed center of {hypergroup.name}", a=a)
    return a


def _first_tail_start(t1: np.ndarray, t2: np.ndarray, bound1: float, bound2: float) -> Optional[int]:
    ok = np.nonzero((t1 < bound1) & (t2 < bound2))[0]
    return int(ok[0]) + 1 if ok.size else None


def _require_disjoint(sets: Iterable[Iterable[int]], label: str) -> None:
    counts = Counter(t for s in sets for t in s)
    shared = [t for t, c in counts.items() if c > 1]
    if shared:
        raise CertificateError(f"{label} translates are not pairwise disjoint", points=sorted(shared)[:10])


def build(
    hypergroup: DiscreteHypergroup,
    U: Iterable[int],
    phi1: YoungFunction,
    phi2: YoungFunction,
    witness: Optional[SequenceWitness] = None,
    M: Optional[int] = None,
    a: Optional[int] = None,
    scan_bound: Optional[int] = None,
    horizon: Optional[int] = None,
) -> CounterexampleInstance:
    """
    Assemble and verify the instance on the given truncation. Raises
    NoAperiodicElementError when the center has no aperiodic element and
    BoundaryError when the blocks up to M leave the halo.
    """
    H = hypergroup
    witness = witness or inverse_sqrt_witness()
    M = M or max(settings.DIVERGENCE_SCHEDULE)
    U = list(U)
    # the aperiodicity gate comes first: without an aperiodic element U is irrelevant
    a = _select_element(H, U, a, scan_bound)
    U_set = _require_symmetric_neighbourhood(H, U)
    U_list = sorted(U_set, key=H.rank_key)
    V = find_V(H, U_set)
    N = find_N(H, a, U_list, scan_bound, _gate_window(H))

    verdict = check_sequence_condition(phi1, phi2, witness, horizon)
    if not verdict.satisfied:
        raise CertificateError(
            f"the witness does not certify the sequence condition ({verdict.verdict})", reasons=verdict.reasons
        )

    VV = set_star(H, V, V)
    lambda_V = float(H.haar_mass(V))
    lambda_VV = float(H.haar_mass(VV))
    t1 = tail_bounds(phi1, witness.alpha)
    t2 = tail_bounds(phi2, witness.beta)
    n_prime = _first_tail_start(t1, t2, 1.0 / lambda_V, 1.0 / lambda_VV)
    if n_prime is None:
        raise CertificateError("no certified tail start below the cutoff", cutoff=len(t1))

    ns = np.arange(n_prime, M + 1, dtype=float)
    alphas = witness.alpha.values(ns)
    betas = witness.beta.values(ns)

    a_inv = H.inv(a)
    step_back = H.power(a_inv, N)
    step_forward = H.power(a, N)
    back = H.power(a_inv, N * n_prime)
    forward = H.power(a, N * n_prime)
    blocks = []
    for i, n in enumerate(range(n_prime, M + 1)):
        blocks.append(
            Block(
                n=n,
                f_points=translate_set(H, back, V),
                g_points=translate_set(H, forward, VV),
                alpha=float(alphas[i]),
                beta=float(betas[i]),
            )
        )
        if n < M:
            back = H.act(step_back, back)
            forward = H.act(step_forward, forward)

    _require_disjoint((b.f_points for b in blocks), "a^{-nN} ∗ V")
    _require_disjoint((b.g_points for b in blocks), "a^{nN} ∗ V ∗ V")

    # g(y⁻ ∗ x) = β_n needs supp(δ_{y⁻} ∗ δ_x) ⊆ a^{nN} ∗ V ∗ V for y in the n-th f block
    for block in blocks:
        for x in V:
            for y in block.f_points:
                if not set(H.conv(H.inv(y), x).support) <= block.g_points:
                    raise CertificateError(
                        "supp(δ_{y⁻} ∗ δ_x) leaves the matching g block", x=x, y=y, n=block.n
                    )

    instance = CounterexampleInstance(
        hypergroup=H,
        a=a,
        U=tuple(U_list),
        V=tuple(sorted(V, key=H.rank_key)),
        VV=tuple(sorted(VV, key=H.rank_key)),
        N=N,
        n_prime=n_prime,
        M=M,
        witness=witness,
        phi1=phi1,
        phi2=phi2,
        lambda_V=lambda_V,
        lambda_VV=lambda_VV,
        tail_bound_1=lambda_V * float(t1[n_prime - 1]),
        tail_bound_2=lambda_VV * float(t2[n_prime - 1]),
        blocks=tuple(blocks),
    )
    f_M, g_M = instance.truncation(M)
    rho_f, rho_g = modular(phi1, f_M), modular(phi2, g_M)
    if not (rho_f < 1.0 and rho_g < 1.0):
        raise CertificateError("truncated modulars are not below 1", modular_f=rho_f, modular_g=rho_g)
    logger.info(
        f"Counterexample on {H.name}: a={a}, V={list(instance.V)}, N={N}, N′={n_prime}, M={M}, "
        f"modulars=({rho_f:.6g}, {rho_g:.6g})"
    )
    return instance


def contrapositive_scan(
    m_max: int = 12,
    window: Optional[int] = None,
    phi: Optional[YoungFunction] = None,
    M: int = 10,
) -> List[ContrapositiveRow]:
    """
    Without aperiodic elements no instance exists: ``build`` must fail with
    NoAperiodicElementError on every ℤ_m (m <= m_max) and on the Chebyshev hypergroup.
    """
    phi = phi or power(3.0)
    hypergroups: List[DiscreteHypergroup] = [make_cyclic(m) for m in range(1, m_max + 1)]
    hypergroups.append(make_chebyshev(window))
    rows = []
    for H in hypergroups:
        U = {H.identity}
        if 1 in H.halo:
            U |= {1, H.inv(1)}
        try:
            build(H, U, phi, phi, M=M)
        except NoAperiodicElementError as exc:
            rows.append(ContrapositiveRow(hypergroup=H.name, error=exc.code, passed=True))
        except OrliczLabException as exc:
            rows.append(ContrapositiveRow(hypergroup=H.name, error=exc.code, passed=False))
        else:
            rows.append(ContrapositiveRow(hypergroup=H.name, passed=False))
    return rows
