import random
import sys

import pytest

from cayleyrank import DegreeSequence, FunctionTable, RootedTree

# Worked example: a 12-vertex table with cycles {3, 7} and {5, 11}.
EXAMPLE_TABLE = {2: 11, 3: 7, 4: 5, 5: 11, 6: 9, 7: 3, 8: 5, 9: 7, 10: 3, 11: 5}
EXAMPLE_TREE = {2: 11, 3: 7, 4: 5, 5: 11, 6: 9, 7: 1, 8: 5, 9: 7, 10: 3, 11: 3, 12: 5}
EXAMPLE_DEGREES = (1, 1, 3, 1, 4, 1, 3, 1, 2, 1, 3, 1)


@pytest.fixture
def example_table():
    return FunctionTable.from_mapping(12, EXAMPLE_TABLE)


@pytest.fixture
def example_tree():
    return RootedTree.from_mapping(12, EXAMPLE_TREE)


@pytest.fixture
def example_degrees():
    return DegreeSequence(EXAMPLE_DEGREES)


def random_tree(n, rng):
    """Uniform attachment order; good enough to exercise arbitrary shapes."""
    order = list(range(2, n + 1))
    rng.shuffle(order)
    placed = [1]
    parent = {}
    for v in order:
        parent[v] = rng.choice(placed)
        placed.append(v)
    return RootedTree.from_mapping(n, parent)


def random_table(n, rng):
    return FunctionTable(n, tuple(rng.randint(1, n) for _ in range(n - 2)))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module and module.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in module.REPORT:
            terminalreporter.write_line(line)
