from __future__ import annotations
import os
import sys

import pytest

# flat module layout, the tests import the top-level modules directly
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from graph import Graph, parse_graph  # noqa: E402

TREE_T = "v1 v2\nv1 v3\nv2 v4\nv2 v5\nv3 v6\nv3 v7\nv7 v8\nv7 v9\n"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the scaling checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large scaling check, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def tree_t_text() -> str:
    return TREE_T


@pytest.fixture
def tree_t() -> Graph:
    return parse_graph(TREE_T)


def cycle_graph(k: int, prefix: str = "c") -> Graph:
    labels = [f"{prefix}{i}" for i in range(k)]
    return Graph(labels, [(labels[i], labels[(i + 1) % k]) for i in range(k)])


@pytest.fixture
def diamond_with_pendant() -> Graph:
    """diamond r x y z with r adjacent to all, plus the pendant edge r w"""
    return parse_graph("r x\nr y\nr z\nx y\ny z\nr w\n")
