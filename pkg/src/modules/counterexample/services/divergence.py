import math
from typing import Iterable, List, Optional

from loguru import logger

from src.core.config import settings
from src.core.exceptions import DomainError
from src.modules.counterexample.models import CounterexampleInstance
from src.modules.counterexample.schemas import DivergenceReport, DivergenceRow
from src.modules.orlicz.services.convolution import convolve_at


def lower_bound(instance: CounterexampleInstance, M: int) -> float:
    """λ(V)·Σ_{n=N′}^{M} α_nβ_n."""
    return instance.lambda_V * math.fsum(b.alpha * b.beta for b in instance.blocks if b.n <= M)


def divergence_report(
    instance: CounterexampleInstance,
    x_grid: Optional[Iterable[int]] = None,
    schedule: Optional[Iterable[int]] = None,
) -> DivergenceReport:
    """
    Exact truncated values (f_M ∗ g_M)(x) for x ∈ V along the M schedule, against
    the closed form λ(V)·Σ_{n=N′}^{M} α_nβ_n.
    """
    xs = list(x_grid) if x_grid is not None else list(instance.V)
    outside = [x for x in xs if x not in instance.V]
    if outside:
        raise DomainError("x_grid must lie inside V", outside=outside, V=list(instance.V))
    Ms = sorted(set(schedule if schedule is not None else settings.DIVERGENCE_SCHEDULE))
    too_long = [M for M in Ms if M > instance.M]
    if too_long:
        raise DomainError(f"schedule exceeds the instance horizon {instance.M}", schedule=too_long)

    rows: List[DivergenceRow] = []
    for M in Ms:
        f_M, g_M = instance.truncation(M)
        bound = lower_bound(instance, M)
        for x in xs:
            value = convolve_at(instance.hypergroup, f_M, g_M, x)
            value = float(value.real) if isinstance(value, complex) else float(value)
            holds = abs(value - bound) <= 1e-12 * max(1.0, abs(bound))
            rows.append(DivergenceRow(M=M, x=x, value=value, lower_bound=bound, identity_holds=holds))
        logger.debug(f"divergence row M={M}: λ(V)Σα_nβ_n = {bound:.12g}")

    increasing = True
    for x in xs:
        values = [r.value for r in rows if r.x == x and r.M >= instance.n_prime]
        increasing &= all(b > a for a, b in zip(values, values[1:]))

    return DivergenceReport(rows=rows, identity_holds=all(r.identity_holds for r in rows), increasing=increasing)
