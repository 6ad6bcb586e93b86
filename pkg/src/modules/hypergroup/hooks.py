from typing import Any, List

from src.core.hooks import hookimpl
from src.modules.hypergroup import commands
from src.modules.hypergroup.services.builders import HYPERGROUP_BUILDERS


class HypergroupHooks:
    module_name = "hypergroup"

    @hookimpl
    def register_hypergroups(self) -> List[Any]:
        return list(HYPERGROUP_BUILDERS)

    @hookimpl
    def register_commands(self, subparsers: Any) -> None:
        commands.register(subparsers)


# Export the hooks object so pluggy can discover it
hooks = HypergroupHooks()
