import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyrank import _instrument
from cayleyrank.partition import (
    PartitionError,
    canonical_block_order,
    canonical_label_order,
    partition_to_ranks,
    ranks_to_partition,
)

GROUND = range(2, 12)


def ordered_partitions(elements):
    """Every ordered partition of ``elements`` into nonempty blocks."""
    if not elements:
        yield []
        return
    for size in range(1, len(elements) + 1):
        for first in itertools.combinations(elements, size):
            rest = [e for e in elements if e not in first]
            for tail in ordered_partitions(rest):
                yield [first, *tail]


def naive_ranks(ground, blocks):
    residual = list(ground)
    out = []
    for block in blocks:
        out.append(tuple(residual.index(x) + 1 for x in sorted(block, reverse=True)))
        for x in block:
            residual.remove(x)
    return out


def test_ranks_example():
    blocks = [{6}, {10, 7}, {9, 3}, {5, 2}, {11, 8, 4}]
    assert partition_to_ranks(GROUND, blocks) == [(5,), (8, 5), (6, 2), (3, 1), (3, 2, 1)]


@pytest.mark.parametrize(
    "ranks, blocks",
    [
        ([(6,), (3, 2), (7, 4), (2, 1), (3, 2, 1)], [(7,), (4, 3), (11, 8), (5, 2), (10, 9, 6)]),
        ([(5,), (8, 5), (6, 2), (3, 1), (3, 2, 1)], [(6,), (10, 7), (9, 3), (5, 2), (11, 8, 4)]),
        ([(7,), (8, 2), (3, 2), (4, 3), (3, 2, 1)], [(8,), (10, 3), (5, 4), (9, 7), (11, 6, 2)]),
    ],
)
def test_partition_examples(ranks, blocks):
    assert ranks_to_partition(GROUND, ranks) == blocks


def test_placement_example():
    ground = range(1, 13)
    blocks = [{9}, {5}, {3, 7, 11}, {1, 2, 4, 6, 8, 10, 12}]
    assert partition_to_ranks(ground, blocks) == [(9,), (5,), (9, 6, 3), (7, 6, 5, 4, 3, 2, 1)]
    assert ranks_to_partition(ground, [(7,), (1,), (6, 5, 1), tuple(range(7, 0, -1))]) == [
        (7,), (1,), (8, 6, 2), (12, 11, 10, 9, 5, 4, 3),
    ]


@pytest.mark.parametrize("m", [1, 4, 9])
def test_single_block(m):
    ground = range(1, m + 1)
    full = tuple(range(m, 0, -1))
    assert partition_to_ranks(ground, [set(ground)]) == [full]
    assert ranks_to_partition(ground, [full]) == [full]


@pytest.mark.parametrize("size", range(0, 8))
def test_exhaustive_round_trip(size):
    ground = range(3, 3 + size)
    count = 0
    for blocks in ordered_partitions(list(ground)):
        ranks = partition_to_ranks(ground, blocks)
        assert ranks == naive_ranks(ground, blocks)
        residual = len(ground)
        for seq in ranks:
            assert max(seq) <= residual
            residual -= len(seq)
        assert residual == 0
        assert ranks_to_partition(ground, ranks) == [tuple(sorted(b, reverse=True)) for b in blocks]
        count += 1
    fubini = [1, 1, 3, 13, 75, 541, 4683, 47293]
    assert count == fubini[size]


@given(st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_random_round_trip_200(rnd):
    ground = range(1, 201)
    elems = list(ground)
    rnd.shuffle(elems)
    cuts = sorted(rnd.sample(range(1, 200), rnd.randint(0, 30)))
    blocks = [elems[a:b] for a, b in zip([0, *cuts], [*cuts, 200])]
    ranks = partition_to_ranks(ground, blocks)
    assert ranks == naive_ranks(ground, blocks)
    assert ranks_to_partition(ground, ranks) == [tuple(sorted(b, reverse=True)) for b in blocks]


def test_quadratic_small_comparison_ceiling():
    ground = range(1, 401)
    blocks = [[i] for i in ground]
    with _instrument.counting() as ops:
        ranks = partition_to_ranks(ground, blocks)
        ranks_to_partition(ground, ranks)
    assert ops["small"] <= 2 * len(ground) ** 2


@pytest.mark.parametrize(
    "blocks",
    [
        [{2, 3}, set(), {4, 5, 6, 7, 8, 9, 10, 11}],  # empty block
        [{2, 3}, {3, 4}],  # overlap
        [{2, 3}],  # incomplete
        [{1}, set(range(2, 12))],  # outside ground
    ],
)
def test_partition_to_ranks_errors(blocks):
    with pytest.raises(PartitionError):
        partition_to_ranks(GROUND, blocks)


@pytest.mark.parametrize(
    "ranks",
    [
        [(11,), tuple(range(9, 0, -1))],  # exceeds residual
        [(3, 3), tuple(range(8, 0, -1))],  # repeated position
        [(2, 5), tuple(range(8, 0, -1))],  # increasing
        [(1,)],  # incomplete
        [(), tuple(range(10, 0, -1))],
    ],
)
def test_ranks_to_partition_errors(ranks):
    with pytest.raises(PartitionError):
        ranks_to_partition(GROUND, ranks)


def test_canonical_order_example():
    sizes = [0, 0, 2, 0, 3, 0, 2, 0, 1, 0, 2, 0]
    blocks = [(label, set(range(100 * label, 100 * label + s))) for label, s in enumerate(sizes, start=1)]
    random.Random(1).shuffle(blocks)
    ordered, empty = canonical_block_order(blocks)
    assert [label for label, _ in ordered] == [9, 3, 7, 11, 5]
    assert empty == [1, 2, 4, 6, 8, 10, 12]


def test_canonical_order_ties_and_singletons():
    ordered, empty = canonical_block_order([(4, {1}), (2, {5}), (9, {3})])
    assert [label for label, _ in ordered] == [2, 4, 9]
    assert empty == []
    ordered, empty = canonical_block_order([(3, set()), (1, {4, 2})])
    assert ordered == [(1, (4, 2))] and empty == [3]


@given(st.dictionaries(st.integers(0, 60), st.integers(0, 8)))
def test_canonical_label_order_properties(sizes):
    order = canonical_label_order(sizes)
    assert sorted(order) == sorted(k for k, v in sizes.items() if v)
    keys = [(sizes[k], k) for k in order]
    assert keys == sorted(keys)


def test_duplicate_label_rejected():
    with pytest.raises(PartitionError):
        canonical_block_order([(1, {2}), (1, {3})])
