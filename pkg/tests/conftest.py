import pytest

from disjhull.lifting import DisjunctionInstance
from disjhull.polyops import HPolytope


@pytest.fixture(scope="session")
def prop1_p0():
    return HPolytope.make(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]], [5, 5, 5, -14])


@pytest.fixture(scope="session")
def prop1_p1():
    return HPolytope.make(3, [[-1, 0, 0], [0, -1, 0], [0, 0, -1], [1, 1, 1]], [0, 0, 0, 1])


@pytest.fixture(scope="session")
def prop1_instance(prop1_p0, prop1_p1):
    """The d=3, a=1, b=5 pair of simplices related by point reflection."""
    return DisjunctionInstance(3, 1, (prop1_p0, prop1_p1))


@pytest.fixture(scope="session")
def intervals3_instance():
    """d=1 disjunction of [0,1], [2,3], [4,5]."""
    polys = tuple(
        HPolytope.make(1, [[1], [-1]], [up, -lo]) for lo, up in ((0, 1), (2, 3), (4, 5))
    )
    return DisjunctionInstance(1, 2, polys)
