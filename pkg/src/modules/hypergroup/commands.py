import argparse
from typing import Any

from src.core.experiment import RunContext, common_options
from src.modules.hypergroup.models import DiscreteHypergroup
from src.modules.hypergroup.services.axioms import validate_axioms
from src.modules.hypergroup.services.builders import dump_hypergroup, load_hypergroup, tabulate
from src.modules.hypergroup.services.structure import aperiodic_elements, center, element_order, is_aperiodic

COMMAND = "hyper"


def selected_hypergroup(args: argparse.Namespace, ctx: RunContext) -> DiscreteHypergroup:
    carrier = getattr(args, "carrier", None)
    return load_hypergroup(carrier or ctx.config.hypergroup, window=ctx.config.window)


def validate_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    H = selected_hypergroup(args, ctx)
    report = validate_axioms(H)
    ctx.writer.write_json(COMMAND, "validate", report.passed, {"hypergroup": dump_hypergroup(H), "report": report})
    return report.passed


def center_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    H = selected_hypergroup(args, ctx)
    report = center(H)
    candidates = aperiodic_elements(H, args.E or [H.identity])
    payload = {"hypergroup": H.describe(), "center": report, "aperiodic_elements": candidates}
    ctx.writer.write_json(COMMAND, "center", True, payload)
    return True


def aperiodic_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    H = selected_hypergroup(args, ctx)
    result = is_aperiodic(H, args.a, args.E or [H.identity], n_max=args.n_max)
    ctx.writer.write_json(COMMAND, "aperiodic", result.aperiodic, {"hypergroup": H.describe(), "result": result})
    return result.aperiodic


def order_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    H = selected_hypergroup(args, ctx)
    order = element_order(H, args.a, bound=args.n_max)
    ctx.writer.write_json(COMMAND, "order", True, {"hypergroup": H.describe(), "a": args.a, "order": order})
    return True


def tabulate_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    H = selected_hypergroup(args, ctx)
    points = args.points if args.points else H.truncation()
    ctx.writer.write_json(COMMAND, "tabulate", True, tabulate(H, points))
    return True


def register(subparsers: Any) -> None:
    common = common_options()
    parser = subparsers.add_parser(COMMAND, parents=[common], help="discrete hypergroups")
    actions = parser.add_subparsers(dest="action", required=True)

    def action(name: str, handler: Any, help_text: str) -> argparse.ArgumentParser:
        p = actions.add_parser(name, parents=[common], help=help_text)
        p.add_argument("carrier", nargs="?", default=None, help="integers | cyclic:m | chebyshev")
        p.set_defaults(handler=handler)
        return p

    action("validate", validate_action, "brute-force axiom checks on the window")

    p = action("center", center_action, "truncation-relative center")
    p.add_argument("--E", type=int, nargs="+", default=None, help="set used to test aperiodicity")

    p = action("aperiodic", aperiodic_action, "aperiodicity of a central element")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--E", type=int, nargs="+", default=None)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)

    p = action("order", order_action, "order of a central element")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)

    p = action("tabulate", tabulate_action, "export structure constants as a JSON table")
    p.add_argument("--points", type=int, nargs="+", default=None)
