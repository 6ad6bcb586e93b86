import argparse
from typing import Any, List

import numpy as np

from src.core.experiment import RunContext, common_options
from src.modules.hypergroup.commands import selected_hypergroup
from src.modules.hypergroup.models import DiscreteHypergroup
from src.modules.operators.services.operators import (
    bound_check,
    criterion_profile,
    default_windows,
    finite_rank_gap,
    psi_delta2_warning,
)
from src.modules.orlicz.models import OrliczFunction, weight_from_spec
from src.modules.orlicz.services.weights import certify
from src.modules.young.serialization import young_from_spec

COMMAND = "opcrit"

RANDOM_SUPPORT = 4


def random_functions(H: DiscreteHypergroup, rng: np.random.Generator, count: int, radius: int) -> List[OrliczFunction]:
    pool = H.ball(radius)
    functions = []
    for _ in range(count):
        size = int(rng.integers(1, min(RANDOM_SUPPORT, len(pool)) + 1))
        support = rng.choice(pool, size=size, replace=False)
        values = rng.normal(size=size)
        functions.append(OrliczFunction(H, {int(x): float(v) for x, v in zip(support, values)}))
    return functions


def profile_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    config = ctx.config
    H = selected_hypergroup(args, ctx)
    phi = young_from_spec(config.phi1)
    g = OrliczFunction.from_spec(H, config.g)
    w = weight_from_spec(config.weight)
    certificate = certify(H, w)
    profile = criterion_profile(H, g, phi, w, windows=config.windows, norm=config.norm, epsilon=config.epsilon)
    warning = psi_delta2_warning(phi)

    ctx.writer.write_csv("opcrit_profile.csv", ["x", "F_g"], zip(profile.points, profile.values))
    nonincreasing = all(b <= a for a, b in zip(profile.tail_sups, profile.tail_sups[1:]))
    passed = certificate.passed and nonincreasing and all(v >= 0 for v in profile.values)
    payload = {
        "hypergroup": H.describe(),
        "phi": phi.to_spec(),
        "g": g.to_spec(),
        "weight": certificate,
        "psi_delta2": warning,
        "profile": profile,
    }
    ctx.writer.write_json(COMMAND, "profile", passed, payload)
    return passed


def gap_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    config = ctx.config
    H = selected_hypergroup(args, ctx)
    phi = young_from_spec(config.phi1)
    g = OrliczFunction.from_spec(H, config.g)
    w = weight_from_spec(config.weight)
    probe = getattr(H, "radius", config.window)
    windows = sorted(set(config.windows)) if config.windows is not None else default_windows(probe)
    gaps = [finite_rank_gap(H, g, phi, w, r, norm=config.norm, probe_radius=probe) for r in windows]
    monotone = all(b <= a for a, b in zip(gaps, gaps[1:]))
    payload = {"hypergroup": H.describe(), "windows": windows, "gaps": gaps, "monotone": monotone}
    ctx.writer.write_json(COMMAND, "gap", monotone, payload)
    return monotone


def bound_action(args: argparse.Namespace, ctx: RunContext) -> bool:
    config = ctx.config
    H = selected_hypergroup(args, ctx)
    phi = young_from_spec(config.phi1)
    g = OrliczFunction.from_spec(H, config.g)
    w = weight_from_spec(config.weight)
    if config.f is not None:
        functions = [OrliczFunction.from_spec(H, config.f)]
    else:
        functions = random_functions(H, ctx.rng(), config.samples, radius=min(5, getattr(H, "radius", 5)))
    checks = [bound_check(H, g, f, phi, w, norm=config.norm) for f in functions]
    failures = [i for i, c in enumerate(checks) if not c.passed]
    payload = {"hypergroup": H.describe(), "samples": len(checks), "failures": failures, "checks": checks}
    ctx.writer.write_json(COMMAND, "bound", not failures, payload)
    return not failures


def register(subparsers: Any) -> None:
    common = common_options()
    parser = subparsers.add_parser(COMMAND, parents=[common], help="compactness criterion for T_g")
    actions = parser.add_subparsers(dest="action", required=True)
    for name, handler, help_text in (
        ("profile", profile_action, "F_g over the enumeration windows"),
        ("gap", gap_action, "finite-rank gap over nested windows"),
        ("bound", bound_action, "‖T_g f‖ against C·‖f‖_1"),
    ):
        p = actions.add_parser(name, parents=[common], help=help_text)
        p.add_argument("carrier", nargs="?", default=None)
        p.set_defaults(handler=handler)
