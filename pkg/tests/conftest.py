import pytest

from cubemedian import MedianComplex, box, grid, random_median, staircase, tree


@pytest.fixture(scope="session")
def q2():
    return grid(1, 1)


@pytest.fixture(scope="session")
def p3():
    return box(2)


@pytest.fixture(scope="session")
def g33():
    return grid(2, 2)


@pytest.fixture(scope="session")
def box222():
    return box(2, 2, 2)


@pytest.fixture(scope="session")
def st2():
    return staircase(2)


@pytest.fixture(scope="session")
def st3():
    return staircase(3)


@pytest.fixture(scope="session")
def tree8():
    return tree(8, seed=1)


@pytest.fixture(scope="session")
def rm451():
    return random_median(4, 5, seed=1)


@pytest.fixture(scope="session")
def single_vertex():
    cx = MedianComplex(1, [])
    from cubemedian import validate
    assert validate(cx).passed
    return cx


@pytest.fixture
def k3():
    return MedianComplex(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c6():
    return MedianComplex(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])


def by_label(cx):
    """Map coordinate label -> vertex index."""
    return {lab: v for v, lab in cx.labels.items()}
