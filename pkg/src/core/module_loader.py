import argparse
import importlib
import pkgutil
from pathlib import Path
from typing import Any, List

import pluggy
from loguru import logger

from src.core.hooks import OrliczLabHookSpec
from src.core.registry import Registry


class ModuleLoader:
    """
    Handles discovery and loading of analysis modules.
    Each package under ``src.modules`` may expose a ``hooks`` object in hooks.py.
    """

    def __init__(self, modules_path: str = "src.modules"):
        self.modules_path = modules_path
        self.pm = pluggy.PluginManager("orlicz_lab")
        self.pm.add_hookspecs(OrliczLabHookSpec)
        self.loaded_modules: List[str] = []
        self.young_families: Registry[Any] = Registry("young family")
        self.hypergroups: Registry[Any] = Registry("hypergroup")

    def discover_and_load(self) -> None:
        """
        Scan the modules directory and load all packages.
        """
        if self.loaded_modules:
            return
        logger.debug(f"Discovering modules in {self.modules_path}")

        try:
            package = importlib.import_module(self.modules_path)
            package_path = Path(list(package.__path__)[0])
        except Exception as e:
            logger.error(f"Could not find modules path {self.modules_path}: {e}")
            return

        for _, name, is_pkg in sorted(pkgutil.iter_modules([str(package_path)])):
            if is_pkg:
                self._load_module(f"{self.modules_path}.{name}")

        self._populate_registries()

    def _load_module(self, module_name: str) -> None:
        """
        Load a single module and register its hooks.
        """
        try:
            hooks_module = importlib.import_module(f"{module_name}.hooks")
        except ModuleNotFoundError as e:
            # Only ignore if the hooks.py file itself is missing
            if e.name != f"{module_name}.hooks":
                logger.error(f"ModuleNotFoundError inside {module_name}.hooks: {e}")
            return
        except Exception as e:
            logger.error(f"Error loading hooks for {module_name}: {e}")
            return

        self.pm.register(getattr(hooks_module, "hooks", hooks_module))
        self.loaded_modules.append(module_name)
        logger.debug(f"Module {module_name} loaded successfully")

    def _populate_registries(self) -> None:
        for entries in self.pm.hook.register_young_families():
            for name, builder in entries or []:
                self.young_families.register(name, builder)
        for entries in self.pm.hook.register_hypergroups():
            for name, builder in entries or []:
                self.hypergroups.register(name, builder)

    def register_commands(self, subparsers: "argparse._SubParsersAction[Any]") -> None:
        """
        Trigger CLI registration hooks for all modules.
        """
        self.pm.hook.register_commands(subparsers=subparsers)


# Singleton instance for easy access
loader = ModuleLoader()
