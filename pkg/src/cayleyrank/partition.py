"""Ordered set partitions of an integer range and their relative-rank codes.

Block ``i`` of an ordered partition ``(B_1, ..., B_k)`` of a ground range is
written as the 1-based positions of its elements (largest first) inside what
is left of the ground set once ``B_1, ..., B_{i-1}`` are removed.  Each block
therefore becomes a strictly decreasing sequence, i.e. an element of some
``DF(a, b)`` space.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence, TypeVar

import numpy as np

from cayleyrank import _instrument

L = TypeVar("L", bound=Hashable)


class PartitionError(ValueError):
    pass


def _decreasing(block: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(block, reverse=True))


def partition_to_ranks(ground: range, blocks: Sequence[Iterable[int]]) -> list[tuple[int, ...]]:
    """Relative-rank sequences of the blocks of an ordered partition of ``ground``."""
    if ground.step != 1:
        raise PartitionError("ground set must be a contiguous range")
    lo, size = ground.start, len(ground)
    present = np.ones(size, dtype=bool)
    out = []
    seen = 0
    for block in blocks:
        elems = _decreasing(block)
        if not elems:
            raise PartitionError("empty blocks must be dropped before encoding")
        idx = np.fromiter((e - lo for e in elems), dtype=np.int64, count=len(elems))
        if idx[0] >= size or idx[-1] < 0 or not present[idx].all() or len(set(elems)) != len(elems):
            raise PartitionError(f"block {elems} is not a fresh subset of {ground}")
        positions = np.cumsum(present)[idx]
        present[idx] = False
        out.append(tuple(positions.tolist()))
        seen += len(elems)
        _instrument.add("small", size)
    if seen != size:
        raise PartitionError(f"blocks cover {seen} of the {size} ground elements")
    return out


def ranks_to_partition(ground: range, ranks: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Inverse of ``partition_to_ranks``; blocks come back in decreasing order."""
    if ground.step != 1:
        raise PartitionError("ground set must be a contiguous range")
    lo, size = ground.start, len(ground)
    present = np.ones(size, dtype=bool)
    residual = size
    out = []
    for seq in ranks:
        seq = tuple(seq)
        if not seq:
            raise PartitionError("empty rank sequences must be dropped before decoding")
        if any(not 1 <= r <= residual for r in seq):
            raise PartitionError(f"ranks {seq} exceed the residual size {residual}")
        if any(a <= b for a, b in zip(seq, seq[1:])):
            raise PartitionError(f"ranks {seq} are not strictly decreasing")
        counts = np.cumsum(present)
        idx = np.searchsorted(counts, np.asarray(seq, dtype=np.int64), side="left")
        present[idx] = False
        out.append(tuple((idx + lo).tolist()))
        residual -= len(seq)
        _instrument.add("small", size)
    if residual:
        raise PartitionError(f"{residual} ground elements left unassigned")
    return out


def canonical_label_order(sizes: Mapping[int, int]) -> list[int]:
    """Labels with nonzero size, ordered by (size, label) ascending.

    Two stable bucket passes, labels first, then sizes; both keys are small
    naturals so the sort is linear.
    """
    if not sizes:
        return []
    by_label: list[list[int]] = [[] for _ in range(max(sizes) + 1)]
    for label in sizes:
        by_label[label].append(label)
    by_size: list[list[int]] = [[] for _ in range(max(sizes.values()) + 1)]
    for bucket in by_label:
        for label in bucket:
            by_size[sizes[label]].append(label)
    return [label for bucket in by_size[1:] for label in bucket]


def canonical_block_order(
    labeled_blocks: Iterable[tuple[int, Iterable[int]]],
) -> tuple[list[tuple[int, tuple[int, ...]]], list[int]]:
    """Sort labelled blocks by size then label, setting empty blocks aside.

    Returns the nonempty ``(label, block)`` pairs in canonical order and the
    labels of the empty blocks in ascending order.
    """
    blocks = {}
    for label, block in labeled_blocks:
        if label in blocks:
            raise PartitionError(f"duplicate block label {label}")
        blocks[label] = _decreasing(block)
    order = canonical_label_order({label: len(b) for label, b in blocks.items()})
    empty = sorted(label for label, b in blocks.items() if not b)
    return [(label, blocks[label]) for label in order], empty
