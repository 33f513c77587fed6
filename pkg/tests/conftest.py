import pytest

from extburnside.groups import group_from_spec
from extburnside.ring import ExtRing


@pytest.fixture(scope="session")
def s4_ring():
    return ExtRing(group_from_spec("S4"))


@pytest.fixture(scope="session")
def s5_ring():
    return ExtRing(group_from_spec("S5"))
