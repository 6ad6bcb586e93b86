from typing import Callable, Dict, Generic, List, TypeVar

from loguru import logger

from src.core.exceptions import ConfigError

T = TypeVar("T")


class Registry(Generic[T]):
    """
    Open registry of named builders.
    Modules contribute entries through the ``register_*`` hooks.
    """

    def __init__(self, kind: str):
        self.kind = kind
        self._builders: Dict[str, Callable[..., T]] = {}

    def register(self, name: str, builder: Callable[..., T]) -> None:
        if name in self._builders:
            logger.warning(f"{self.kind} '{name}' is already registered. Skipping duplicate.")
            return
        self._builders[name] = builder
        logger.debug(f"Registered {self.kind} builder '{name}'")

    def build(self, name: str, *args, **kwargs) -> T:
        builder = self._builders.get(name)
        if builder is None:
            raise ConfigError(
                f"Unknown {self.kind} '{name}'", known=sorted(self._builders)
            )
        return builder(*args, **kwargs)

    def names(self) -> List[str]:
        return sorted(self._builders)

    def clear(self) -> None:
        self._builders.clear()
