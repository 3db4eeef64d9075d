import pytest

from domcx import build_surface


@pytest.fixture(scope="session")
def s05():
    return build_surface(0, 5)


@pytest.fixture(scope="session")
def s06():
    return build_surface(0, 6)


@pytest.fixture(scope="session")
def s13():
    return build_surface(1, 3)


@pytest.fixture(scope="session")
def surfaces(s05, s06, s13):
    return {(0, 5): s05, (0, 6): s06, (1, 3): s13}
