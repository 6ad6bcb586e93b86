from typing import Any, List

from pluggy import HookimplMarker, HookspecMarker

hookspec = HookspecMarker("orlicz_lab")
hookimpl = HookimplMarker("orlicz_lab")


class OrliczLabHookSpec:
    """
    Hook specifications for analysis modules.
    Modules implement these hooks to plug into the CLI and the builder registries.
    """

    @hookspec
    def register_commands(subparsers: Any) -> None:
        """
        Add the module's sub-command (and its actions) to the CLI parser.
        The sub-parser must set ``handler`` via ``set_defaults``.
        """

    @hookspec
    def register_young_families() -> List[Any]:
        """
        Return (name, builder) pairs; builder(spec: dict) -> YoungFunction.
        """

    @hookspec
    def register_hypergroups() -> List[Any]:
        """
        Return (name, builder) pairs; builder(spec: dict) -> DiscreteHypergroup.
        """
