"""
orlicz-lab command line: ``python -m src.main <command> <action> [options]``.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger

from src.core.config import settings
from src.core.exceptions import OrliczLabException, handle_cli_error
from src.core.experiment import RunContext, common_options
from src.core.logging import setup_logging
from src.core.module_loader import loader


def _list_modules(args: argparse.Namespace, ctx: RunContext) -> bool:
    print("\n" + "=" * 40)
    print(f"{settings.PROJECT_NAME} - Loaded Modules")
    print("=" * 40)
    if not loader.loaded_modules:
        print(" No modules loaded.")
    for mod in loader.loaded_modules:
        print(f" - {mod}")
    print("=" * 40 + "\n")
    return True


def build_parser() -> argparse.ArgumentParser:
    loader.discover_and_load()
    parser = argparse.ArgumentParser(
        prog="orlicz-lab",
        description="Orlicz spaces on discrete hypergroups: norms, convolution, counterexamples, compactness.",
        parents=[common_options()],
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    modules = subparsers.add_parser("modules", help="list loaded modules", parents=[common_options()])
    modules.set_defaults(handler=_list_modules)
    loader.register_commands(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(verbose=getattr(args, "verbose", False))
    out_dir = Path(getattr(args, "out", settings.OUTPUT_DIR))
    try:
        ctx = RunContext.from_args(args)
        out_dir = Path(ctx.config.out)
        with logger.contextualize(command=args.command, action=getattr(args, "action", None)):
            passed = args.handler(args, ctx)
    except OrliczLabException as exc:
        return handle_cli_error(exc, out_dir)
    if not passed:
        logger.error(f"{args.command} {getattr(args, 'action', '')}: invariant check failed")
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
