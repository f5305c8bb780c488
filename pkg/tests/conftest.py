import pytest

from kernelpaint import Graph, make_named


@pytest.fixture
def c4():
    return make_named("cycle", [4])


@pytest.fixture
def c5():
    return make_named("cycle", [5])


@pytest.fixture
def k4():
    return make_named("complete", [4])


@pytest.fixture
def k4e():
    return make_named("K4_minus_e")


@pytest.fixture
def petersen():
    return make_named("petersen")


@pytest.fixture
def bowtie():
    return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
