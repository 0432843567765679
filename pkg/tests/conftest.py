import random

import pytest

from binedge.graphs import Graph


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def diamond():
    # generators come out in this edge order: f1..f5
    return Graph(4, [(1, 2), (2, 3), (1, 4), (3, 4), (1, 3)])


@pytest.fixture
def house():
    return Graph(5, [(1, 2), (2, 3), (1, 3), (2, 4), (4, 5), (3, 5)])


@pytest.fixture
def paw():
    return Graph(4, [(1, 2), (2, 3), (1, 3), (1, 4)])


@pytest.fixture
def rng():
    return random.Random(20240611)
