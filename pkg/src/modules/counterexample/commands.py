import argparse
from typing import Any

from src.core.experiment import RunContext, common_options
from src.modules.counterexample.models import CounterexampleInstance
from src.modules.counterexample.services.construction import build, contrapositive_scan, sized_for
from src.modules.counterexample.services.divergence import divergence_report
from src.modules.hypergroup.commands import selected_hypergroup
from src.modules.young.serialization import witness_from_spec, young_from_spec

COMMAND = "cex"


def _instance(args: argparse.Namespace, ctx: RunContext) -> CounterexampleInstance:
    config = ctx.config
    M = max(config.schedule) if config.schedule else config.horizon
    H = sized_for(selected_hypergroup(args, ctx), config.U, M, config.a)
    return build(
        H,
        config.U,
        young_from_spec(config.phi1),
        young_from_spec(config.phi2),
        witness_from_spec(config.witness),
        M=M,
        a=config.a,
        horizon=config.horizon,
    )


def build_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    instance = _instance(args, ctx)
    ctx.writer.write_json(COMMAND, "build", True, instance.descriptor())
    return True


def diverge_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    instance = _instance(args, ctx)
    report = divergence_report(instance, ctx.config.x_grid, ctx.config.schedule)
    ctx.writer.write_csv(
        "cex_divergence.csv",
        ["M", "x", "value", "lower_bound"],
        ([r.M, r.x, r.value, r.lower_bound] for r in report.rows),
    )
    ctx.writer.write_json(COMMAND, "diverge", report.passed, {"instance": instance.descriptor(), "report": report})
    return report.passed


def scan_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    rows = contrapositive_scan(ctx.config.m_max, ctx.config.window)
    passed = all(r.passed for r in rows)
    ctx.writer.write_json(COMMAND, "scan", passed, {"m_max": ctx.config.m_max, "rows": rows})
    return passed


def register(subparsers: Any) -> None:
    common = common_options()
    parser = subparsers.add_parser(COMMAND, parents=[common], help="divergent-convolution construction")
    actions = parser.add_subparsers(dest="action", required=True)
    for name, handler, help_text in (
        ("build", build_action, "construct and verify the instance"),
        ("diverge", diverge_action, "truncated (f ∗ g)(x) along the M schedule"),
        ("scan", scan_action, "construction fails without aperiodic elements"),
    ):
        p = actions.add_parser(name, parents=[common], help=help_text)
        p.add_argument("carrier", nargs="?", default=None)
        p.set_defaults(handler=handler)
