import argparse

from src.core.module_loader import ModuleLoader, loader

MODULES = {"young", "hypergroup", "orlicz", "counterexample", "operators"}


def test_discovers_all_analysis_modules():
    names = {m.rsplit(".", 1)[-1] for m in loader.loaded_modules}
    assert MODULES <= names


def test_registries_are_populated():
    assert {"power", "powerlog", "custom"} <= set(loader.young_families.names())
    assert {"integers", "cyclic", "chebyshev", "table"} <= set(loader.hypergroups.names())


def test_discovery_is_idempotent():
    fresh = ModuleLoader()
    fresh.discover_and_load()
    count = len(fresh.loaded_modules)
    fresh.discover_and_load()
    assert len(fresh.loaded_modules) == count


def test_register_commands_adds_every_subcommand():
    parser = argparse.ArgumentParser()
    subparsers = parser.add_subparsers(dest="command")
    loader.register_commands(subparsers)
    assert {"young", "hyper", "norm", "cex", "opcrit"} <= set(subparsers.choices)


def test_missing_modules_path_is_logged_not_raised():
    broken = ModuleLoader("src.does_not_exist")
    broken.discover_and_load()
    assert broken.loaded_modules == []
