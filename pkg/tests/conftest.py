import pytest

from tiltlab.pcan import algebra_for_type
from tiltlab.sphmod import get_module


@pytest.fixture(scope="session")
def a1():
    """Hecke algebra of extended affine A1 (weight lattice)."""
    return algebra_for_type("A1-affine-ext")


@pytest.fixture(scope="session")
def a2():
    return algebra_for_type("A2-affine-ext")


@pytest.fixture(scope="session")
def a3():
    return algebra_for_type("A3-affine-ext")


@pytest.fixture(scope="session")
def a1_sph(a1):
    return get_module(a1, "sph")


@pytest.fixture(scope="session")
def a1_asph(a1):
    return get_module(a1, "asph")


@pytest.fixture(scope="session")
def a2_sph(a2):
    return get_module(a2, "sph")


@pytest.fixture(scope="session")
def a2_asph(a2):
    return get_module(a2, "asph")
