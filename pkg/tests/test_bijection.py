import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyrank.bijection import (
    Cycle,
    FunctionTable,
    InvalidStructure,
    RootedTree,
    cycle_decomposition,
    degrees_of,
    preimage_partition,
    table_from_preimages,
    theta,
    theta_inverse,
)
from cayleyrank.oracle import enumerate_functions, naive_theta

from conftest import EXAMPLE_DEGREES, EXAMPLE_TREE, random_table, random_tree


def test_theta_two_vertices():
    t = theta(FunctionTable(2, ()))
    assert t.as_dict() == {2: 1}


def test_theta_example(example_table):
    assert theta(example_table).as_dict() == EXAMPLE_TREE


def test_cycle_decomposition_example(example_table):
    assert cycle_decomposition(example_table) == [Cycle(left=5, right=11), Cycle(left=3, right=7)]


def test_theta_acyclic_adds_edge_to_root():
    f = FunctionTable.from_mapping(4, {2: 1, 3: 4})
    assert cycle_decomposition(f) == []
    assert theta(f).as_dict() == {2: 1, 3: 4, 4: 1}


def test_theta_inverse_examples(example_table, example_tree):
    assert theta_inverse(RootedTree(2, (1,))) == FunctionTable(2, ())
    assert theta_inverse(example_tree) == example_table


def test_theta_inverse_chain_is_all_loops():
    # every interior vertex of n -> n-1 -> ... -> 1 is a right-to-left maximum
    chain = RootedTree.from_mapping(5, {2: 1, 3: 2, 4: 3, 5: 4})
    f = theta_inverse(chain)
    assert f.as_dict() == {2: 2, 3: 3, 4: 4}
    assert theta(f) == chain


def test_degrees(example_tree):
    assert degrees_of(RootedTree(2, (1,))) == [1, 1]
    assert degrees_of(example_tree) == list(EXAMPLE_DEGREES)
    star = RootedTree(6, (1,) * 5)
    assert degrees_of(star) == [5, 1, 1, 1, 1, 1]


def test_preimage_partition(example_table):
    assert preimage_partition(example_table) == [
        set(), set(), {10, 7}, set(), {11, 8, 4}, set(), {9, 3}, set(), {6}, set(), {5, 2}, set(),
    ]
    assert preimage_partition(FunctionTable(2, ())) == [set(), set()]
    assert preimage_partition(FunctionTable(5, (1, 1, 1))) == [{2, 3, 4}, set(), set(), set(), set()]


def test_table_from_preimages_round_trip(example_table):
    assert table_from_preimages(12, preimage_partition(example_table)) == example_table
    with pytest.raises(InvalidStructure):
        table_from_preimages(4, [{2}, set(), set(), set()])


@pytest.mark.parametrize("n", range(2, 8))
def test_exhaustive_round_trip_and_degree_law(n):
    images = set()
    for f in enumerate_functions(n):
        t = theta(f)
        assert theta_inverse(t) == f
        assert t == naive_theta(f)
        pre = Counter(f.targets)
        indeg = Counter(t.parent)
        assert degrees_of(t) == [1 + pre[i] for i in range(1, n + 1)]
        assert all(indeg[i] == pre[i] for i in range(2, n + 1))
        assert indeg[1] == pre[1] + 1
        images.add(t)
    assert len(images) == n ** (n - 2)


@st.composite
def trees(draw, max_n=60):
    n = draw(st.integers(2, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tree(n, random.Random(seed))


@given(trees())
@settings(max_examples=300, deadline=None)
def test_random_trees_round_trip(t):
    f = theta_inverse(t)
    assert theta(f) == t
    assert degrees_of(t) == [1 + len(b) for b in preimage_partition(f)]


@given(st.integers(2, 200), st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_random_tables_round_trip(n, seed):
    f = random_table(n, random.Random(seed))
    t = theta(f)
    RootedTree(t.n, t.parent)  # full validation: acyclic, reaches 1
    assert theta_inverse(t) == f


def test_cycle_order_strictly_decreasing(rng):
    for _ in range(50):
        f = random_table(300, rng)
        cycles = cycle_decomposition(f)
        maxima = [c.right for c in cycles]
        assert maxima == sorted(maxima, reverse=True)
        assert len(set(maxima)) == len(maxima)
        g = f.as_dict()
        for c in cycles:
            assert c.left == g[c.right]
            members = [c.right]
            x = g[c.right]
            while x != c.right:
                members.append(x)
                x = g[x]
            assert max(members) == c.right


@pytest.mark.parametrize(
    "n, parent",
    [
        (1, ()),
        (3, (1,)),
        (3, (3, 2)),  # 2 -> 3 -> 2 cycle
        (3, (2, 1)),  # self loop at 2
        (3, (1, 4)),
    ],
)
def test_invalid_trees_rejected(n, parent):
    with pytest.raises(InvalidStructure):
        RootedTree(n, parent)


@pytest.mark.parametrize("n, targets", [(1, ()), (4, (1,)), (4, (1, 5)), (4, (0, 1))])
def test_invalid_tables_rejected(n, targets):
    with pytest.raises(InvalidStructure):
        FunctionTable(n, targets)


def test_from_mapping_domain_checked():
    with pytest.raises(InvalidStructure):
        FunctionTable.from_mapping(4, {2: 1})
    with pytest.raises(InvalidStructure):
        RootedTree.from_edges(3, [(2, 1), (2, 3)])


def test_three_vertex_tables():
    # n = 3 has exactly three tables
    expected = {(1,): {2: 1, 3: 1}, (2,): {2: 1, 3: 2}, (3,): {2: 3, 3: 1}}
    for targets, tree in expected.items():
        assert theta(FunctionTable(3, targets)).as_dict() == tree


def test_permutation_tables_round_trip():
    # permutations of the domain: every vertex lies on a cycle
    n = 7
    for perm in itertools.permutations(range(2, n)):
        f = FunctionTable(n, perm)
        assert theta_inverse(theta(f)) == f
