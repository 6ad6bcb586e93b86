import pytest

from src.core.module_loader import loader
from src.modules.hypergroup.services.builders import make_chebyshev, make_cyclic, make_integers
from src.modules.young.services.calculus import power


@pytest.fixture(scope="session", autouse=True)
def loaded_modules():
    loader.discover_and_load()
    return loader


@pytest.fixture
def integers():
    return make_integers(20)


@pytest.fixture
def chebyshev():
    return make_chebyshev(20)


@pytest.fixture
def z5():
    return make_cyclic(5)


@pytest.fixture(scope="session")
def power2():
    return power(2.0)


@pytest.fixture(scope="session")
def power3():
    return power(3.0)
