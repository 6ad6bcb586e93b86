import math
from itertools import product
from typing import Optional, Sequence

from loguru import logger

from src.core.config import settings
from src.modules.hypergroup.models import DiscreteHypergroup
from src.modules.orlicz.models import Weight
from src.modules.orlicz.schemas import WeightCertificate


def certify(hypergroup: DiscreteHypergroup, w: Weight, points: Optional[Sequence[int]] = None) -> WeightCertificate:
    """
    w > 0 and Σ_t (δ_x ∗ δ_y)({t})·w(t) <= w(x)·w(y) on all pairs of the truncation.
    ``worst_ratio`` is the largest left/right ratio seen.
    """
    window = list(points) if points is not None else hypergroup.truncation()
    positive = all(w(x) > 0 for x in window)
    if not positive:
        logger.warning(f"weight {w.name} is not positive on {hypergroup.name}")
        return WeightCertificate(weight=w.name, passed=False, positive=False, worst_ratio=math.inf, window=window)
    worst, witness = 0.0, None
    for x, y in product(window, window):
        measure = hypergroup.conv(x, y)
        lhs = sum(float(c) * w(t) for t, c in zip(measure.support, measure.weights))
        ratio = lhs / (w(x) * w(y))
        if ratio > worst:
            worst = ratio
            if ratio > 1.0 + settings.TABLE_TOL:
                witness = witness or [x, y]
    passed = positive and witness is None
    if not passed:
        logger.warning(f"weight {w.name} is not submultiplicative on {hypergroup.name}: witness {witness}")
    return WeightCertificate(
        weight=w.name, passed=passed, positive=positive, worst_ratio=worst, witness=witness, window=window
    )
