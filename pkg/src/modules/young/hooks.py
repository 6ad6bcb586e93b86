from typing import Any, List

from src.core.hooks import hookimpl
from src.modules.young import commands
from src.modules.young.serialization import FAMILY_BUILDERS


class YoungHooks:
    module_name = "young"

    @hookimpl
    def register_young_families(self) -> List[Any]:
        return list(FAMILY_BUILDERS)

    @hookimpl
    def register_commands(self, subparsers: Any) -> None:
        commands.register(subparsers)


# Export the hooks object so pluggy can discover it
hooks = YoungHooks()
