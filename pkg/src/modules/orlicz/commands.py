import argparse
from typing import Any, Dict, Optional

from src.core.exceptions import ConfigError
from src.core.experiment import RunContext, common_options
from src.modules.hypergroup.commands import selected_hypergroup
from src.modules.hypergroup.models import DiscreteHypergroup
from src.modules.orlicz.models import OrliczFunction, weight_from_spec
from src.modules.orlicz.schemas import NormReport
from src.modules.orlicz.services.norms import (
    dual_sup_norm,
    holder_check,
    l1_norm,
    luxemburg_norm,
    modular,
    orlicz_norm,
)
from src.modules.young.serialization import young_from_spec

COMMAND = "norm"

DEFAULT_F = {"support": [0], "values": [1.0]}


def function_from_args(
    args: argparse.Namespace, ctx: RunContext, H: DiscreteHypergroup, spec: Optional[Dict[str, Any]]
) -> OrliczFunction:
    support = getattr(args, "support", None)
    if support:
        values = args.values or [1.0] * len(support)
        if len(values) != len(support):
            raise ConfigError("--values must match --support in length")
        return OrliczFunction(H, dict(zip(support, values)))
    return OrliczFunction.from_spec(H, spec or DEFAULT_F)


def _norm_action(kind: str):
    def handler(args: argparse.Namespace, ctx: RunContext) -> bool:
        H = selected_hypergroup(args, ctx)
        phi = young_from_spec(ctx.config.phi1)
        f = function_from_args(args, ctx, H, ctx.config.f)
        w = weight_from_spec(ctx.config.weight)
        tol = ctx.config.tol
        if kind == "modular":
            value = modular(phi, f, w)
        elif kind == "luxemburg":
            value = luxemburg_norm(phi, f, w, tol)
        elif kind == "orlicz":
            value = orlicz_norm(phi, f, w, tol)
        elif kind == "dual_sup":
            value = dual_sup_norm(phi, f, w=w)
        else:
            value = l1_norm(f, w)
        report = NormReport(kind=kind, value=value, tol=tol, weight=w.name, support_size=len(f.support))
        payload = {"hypergroup": H.describe(), "phi": phi.to_spec(), "f": f.to_spec(), "report": report}
        ctx.writer.write_json(COMMAND, kind, True, payload)
        return True

    return handler


def holder_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    H = selected_hypergroup(args, ctx)
    phi = young_from_spec(ctx.config.phi1)
    f = function_from_args(args, ctx, H, ctx.config.f)
    g = OrliczFunction.from_spec(H, ctx.config.g)
    report = holder_check(phi, f, g)
    payload = {"hypergroup": H.describe(), "phi": phi.to_spec(), "f": f.to_spec(), "g": g.to_spec(), "report": report}
    ctx.writer.write_json(COMMAND, "holder", report.passed, payload)
    return report.passed


def register(subparsers: Any) -> None:
    common = common_options()
    parser = subparsers.add_parser(COMMAND, parents=[common], help="modulars and norms")
    actions = parser.add_subparsers(dest="action", required=True)
    handlers = {
        "modular": _norm_action("modular"),
        "luxemburg": _norm_action("luxemburg"),
        "orlicz": _norm_action("orlicz"),
        "dual": _norm_action("dual_sup"),
        "l1": _norm_action("l1"),
        "holder": holder_action,
    }
    for name, handler in handlers.items():
        p = actions.add_parser(name, parents=[common])
        p.add_argument("carrier", nargs="?", default=None)
        p.add_argument("--support", type=int, nargs="+", default=None)
        p.add_argument("--values", type=float, nargs="+", default=None)
        p.set_defaults(handler=handler)
