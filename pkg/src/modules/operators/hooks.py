from typing import Any

from src.core.hooks import hookimpl
from src.modules.operators import commands


class OperatorHooks:
    module_name = "operators"

    @hookimpl
    def register_commands(self, subparsers: Any) -> None:
        commands.register(subparsers)


hooks = OperatorHooks()
