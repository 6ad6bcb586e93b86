from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Tuple

from src.modules.hypergroup.models import DiscreteHypergroup
from src.modules.hypergroup.services.builders import dump_hypergroup
from src.modules.orlicz.models import OrliczFunction
from src.modules.young.models import SequenceWitness, YoungFunction


@dataclass(frozen=True)
class Block:
    """The n-th pieces: f = α_n on a^{−nN} ∗ V and g = β_n on a^{nN} ∗ V ∗ V."""
    n: int
    f_points: FrozenSet[int]
    g_points: FrozenSet[int]
    alpha: float
    beta: float


@dataclass(frozen=True, eq=False)
class CounterexampleInstance:
    hypergroup: DiscreteHypergroup = field(repr=False)
    a: int
    U: Tuple[int, ...]
    V: Tuple[int, ...]
    VV: Tuple[int, ...]
    N: int
    n_prime: int
    M: int
    witness: SequenceWitness
    phi1: YoungFunction = field(repr=False)
    phi2: YoungFunction = field(repr=False)
    lambda_V: float
    lambda_VV: float
    tail_bound_1: float
    tail_bound_2: float
    blocks: Tuple[Block, ...] = field(repr=False)

    def truncation(self, M: int) -> Tuple[OrliczFunction, OrliczFunction]:
        """(f_M, g_M): the blocks n ∈ [N′, M]."""
        f_values: Dict[int, float] = {}
        g_values: Dict[int, float] = {}
        for block in self.blocks:
            if block.n > M:
                break
            for y in block.f_points:
                f_values[y] = block.alpha
            for t in block.g_points:
                g_values[t] = block.beta
        return OrliczFunction(self.hypergroup, f_values), OrliczFunction(self.hypergroup, g_values)

    def descriptor(self) -> Dict[str, Any]:
        return {
            "hypergroup": dump_hypergroup(self.hypergroup),
            "a": self.a,
            "U": list(self.U),
            "V": list(self.V),
            "V_star_V": list(self.VV),
            "N": self.N,
            "n_prime": self.n_prime,
            "M": self.M,
            "lambda_V": self.lambda_V,
            "lambda_V_star_V": self.lambda_VV,
            "phi1": self.phi1.to_spec(),
            "phi2": self.phi2.to_spec(),
            "witness": self.witness.to_spec(),
            "certified_tail_bounds": {
                "modular_f": self.tail_bound_1,
                "modular_g": self.tail_bound_2,
            },
        }
