import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdgamma import polytopes  # noqa: E402
from cdgamma.poset import boolean_lattice, build_from_covers  # noqa: E402


@pytest.fixture(scope="session")
def triangle():
    return polytopes.polygon(3)


@pytest.fixture(scope="session")
def square():
    return polytopes.polygon(4)


@pytest.fixture(scope="session")
def cube3():
    return polytopes.cube(3)


@pytest.fixture(scope="session")
def tetra():
    return polytopes.simplex(3)


@pytest.fixture(scope="session")
def simplex4():
    return polytopes.simplex(4)


@pytest.fixture(scope="session")
def b2():
    return boolean_lattice(2)


@pytest.fixture(scope="session")
def chain2():
    return build_from_covers(["bot", "x", "top"], [("bot", "x"), ("x", "top")])


@pytest.fixture(scope="session")
def golden_polytopes():
    return polytopes.golden_polytopes()
