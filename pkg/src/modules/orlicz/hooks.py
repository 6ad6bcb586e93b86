from typing import Any

from src.core.hooks import hookimpl
from src.modules.orlicz import commands


class OrliczHooks:
    module_name = "orlicz"

    @hookimpl
    def register_commands(self, subparsers: Any) -> None:
        commands.register(subparsers)


# Export the hooks object so pluggy can discover it
hooks = OrliczHooks()
