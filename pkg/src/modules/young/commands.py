import argparse
import json
from typing import Any, Dict, Optional

import numpy as np
from loguru import logger

from src.core.exceptions import ConfigError
from src.core.experiment import RunContext, common_options
from src.modules.young.models import YoungFunction
from src.modules.young.serialization import witness_from_spec, young_from_spec
from src.modules.young.services.calculus import complementary_array, evaluate, is_delta2, small_x_slope
from src.modules.young.services.sequence import check_sequence_condition, lebesgue_pair_check

COMMAND = "young"


def _spec(p: Optional[float], gamma: Optional[float], expr: Optional[str]) -> Optional[Dict[str, Any]]:
    if expr is not None:
        return {"custom": expr}
    if p is None:
        return None
    if gamma is None:
        return {"family": "power", "params": {"p": p}}
    return {"family": "powerlog", "params": {"p": p, "gamma": gamma}}


def _phi(args: argparse.Namespace, ctx: RunContext, index: int = 1) -> YoungFunction:
    suffix = "" if index == 1 and hasattr(args, "p") else str(index)
    spec = _spec(
        getattr(args, f"p{suffix}", None), getattr(args, f"gamma{suffix}", None), getattr(args, f"expr{suffix}", None)
    )
    return young_from_spec(spec or (ctx.config.phi1 if index == 1 else ctx.config.phi2))


def _witness(args: argparse.Namespace, ctx: RunContext) -> Any:
    raw = args.witness
    if raw is None:
        return witness_from_spec(ctx.config.witness)
    if raw.lstrip().startswith("{"):
        try:
            return witness_from_spec(json.loads(raw))
        except json.JSONDecodeError as e:
            raise ConfigError(f"--witness is not valid JSON: {e}")
    return witness_from_spec(raw)


def eval_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    phi = _phi(args, ctx)
    values = [[x, evaluate(phi, x)] for x in args.x]
    ctx.writer.write_json(COMMAND, "eval", True, {"phi": phi.to_spec(), "values": values})
    return True


def conjugate_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    phi = _phi(args, ctx)
    xs = np.asarray(args.x, dtype=float)
    psi = complementary_array(phi, xs)
    payload = {
        "phi": phi.to_spec(),
        "values": [[float(x), float(v)] for x, v in zip(xs, psi)],
        "evidence": "attained objective values, lower bounds of the supremum",
    }
    ctx.writer.write_json(COMMAND, "conjugate", True, payload)
    return True


def delta2_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    phi = _phi(args, ctx)
    report = is_delta2(phi, t0=args.t0)
    ctx.writer.write_json(COMMAND, "delta2", report.status == "certificate", {"phi": phi.to_spec(), "report": report})
    return report.status == "certificate"


def slope_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    phi = _phi(args, ctx)
    report = small_x_slope(phi)
    passed = report.status != "inconclusive"
    ctx.writer.write_json(COMMAND, "slope", passed, {"phi": phi.to_spec(), "report": report})
    return passed


def seqcond_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    phi1, phi2 = _phi(args, ctx, 1), _phi(args, ctx, 2)
    witness = _witness(args, ctx)
    verdict = check_sequence_condition(phi1, phi2, witness, horizon=ctx.config.horizon)
    payload = {"phi1": phi1.to_spec(), "phi2": phi2.to_spec(), "witness": witness.to_spec(), "verdict": verdict}
    ctx.writer.write_json(COMMAND, "seqcond", verdict.satisfied, payload)
    logger.info(f"sequence condition: {verdict.verdict}")
    return verdict.satisfied


def pair_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    verdict, agrees = lebesgue_pair_check(args.p, args.q, horizon=ctx.config.horizon)
    payload = {"p": args.p, "q": args.q, "expected_satisfied": args.p > 2 and args.q > 2, "verdict": verdict}
    ctx.writer.write_json(COMMAND, "pair", agrees, payload)
    return agrees


def _add_phi_options(parser: argparse.ArgumentParser, suffix: str = "") -> None:
    parser.add_argument(f"--p{suffix}", type=float, default=None, help="power exponent p >= 1")
    parser.add_argument(f"--gamma{suffix}", type=float, default=None, help="log exponent γ >= 0")
    parser.add_argument(f"--expr{suffix}", type=str, default=None, help="custom expression in x")


def register(subparsers: Any) -> None:
    common = common_options()
    parser = subparsers.add_parser(COMMAND, parents=[common], help="Young-function calculus")
    actions = parser.add_subparsers(dest="action", required=True)

    p = actions.add_parser("eval", parents=[common], help="Φ(|x|)")
    _add_phi_options(p)
    p.add_argument("--x", type=float, nargs="+", default=[0.0, 1.0, 2.0])
    p.set_defaults(handler=eval_action)

    p = actions.add_parser("conjugate", parents=[common], help="complementary function Ψ(x)")
    _add_phi_options(p)
    p.add_argument("--x", type=float, nargs="+", default=[0.0, 1.0, 2.0])
    p.set_defaults(handler=conjugate_action)

    p = actions.add_parser("delta2", parents=[common], help="Δ₂ probe")
    _add_phi_options(p)
    p.add_argument("--t0", type=float, default=0.0)
    p.set_defaults(handler=delta2_action)

    p = actions.add_parser("slope", parents=[common], help="lim Φ(x)/x as x → 0+")
    _add_phi_options(p)
    p.set_defaults(handler=slope_action)

    p = actions.add_parser("seqcond", parents=[common], help="sequence condition for a pair")
    _add_phi_options(p, "1")
    _add_phi_options(p, "2")
    p.add_argument("--witness", type=str, default=None, help="'invsqrt' or a JSON witness spec")
    p.set_defaults(handler=seqcond_action)

    p = actions.add_parser("pair", parents=[common], help="Lebesgue pair (|x|^p, |x|^q)")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.set_defaults(handler=pair_action)
