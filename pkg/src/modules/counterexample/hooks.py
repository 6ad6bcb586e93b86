from typing import Any

from src.core.hooks import hookimpl
from src.modules.counterexample import commands


class CounterexampleHooks:
    module_name = "counterexample"

    @hookimpl
    def register_commands(self, subparsers: Any) -> None:
        commands.register(subparsers)


# Export the hooks object so pluggy can discover it
hooks = CounterexampleHooks()
