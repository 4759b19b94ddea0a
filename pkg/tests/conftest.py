import pytest

from pgcodes.expcode import CodeSpec
from pgcodes.galois import GF
from pgcodes.projgeom import ProjectiveSpace
from pgcodes.tanner import TannerGraph


@pytest.fixture(scope="session")
def field8():
    return GF(8)


@pytest.fixture(scope="session")
def space5():
    return ProjectiveSpace(5)


@pytest.fixture(scope="session")
def graph5(space5):
    return TannerGraph(space5)


@pytest.fixture(scope="session")
def spec5(field8):
    return CodeSpec(5, field=field8)


@pytest.fixture(scope="session")
def spec7(field8):
    return CodeSpec(7, field=field8)
