import pytest

from chowring.f4pipeline import get_f4_varieties
from chowring.rootsystem import root_system
from chowring.schubert import get_chow_ring
from chowring.weyl import get_weyl_group


@pytest.fixture(scope="session")
def f4():
    return root_system("F4")


@pytest.fixture(scope="session")
def f4_group(f4):
    return get_weyl_group(f4)


@pytest.fixture(scope="session")
def x1():
    return get_f4_varieties()[0]


@pytest.fixture(scope="session")
def x4():
    return get_f4_varieties()[1]


@pytest.fixture(scope="session")
def a2_flag():
    return get_chow_ring(root_system("A2"), ())


@pytest.fixture(scope="session")
def b2_flag():
    return get_chow_ring(root_system("B2"), ())
