"""Counting, ranking, unranking and sampling of degree-restricted trees.

Trees are rooted at vertex 1.  A class is fixed either by a full degree
sequence (``SequenceClass``) or by a degree multiset (``MultisetClass``).
Through ``theta`` a tree with degrees ``s`` corresponds to a function table
whose preimage sizes are ``s_i - 1``, so ranking a tree means ranking the
ordered partition ``<f^-1(1), ..., f^-1(n)>`` of ``{2, ..., n-1}``.  The
nonempty preimages are put in (size, label) order, every block becomes a
decreasing sequence of relative ranks, and the per-block ranks are combined
as mixed-radix digits.

For a multiset the assignment of degrees to vertices is one more ordered
partition, this time of ``{1, ..., n}``, whose digits come first.

Public degrees are true degrees (``>= 1``); preimage sizes are internal.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from cayleyrank.bijection import (
    FunctionTable,
    RootedTree,
    degrees_of,
    preimage_partition,
    table_from_preimages,
    theta,
    theta_inverse,
)
from cayleyrank.dfcodec import BinomialTable, DFSpace, RankOutOfRange, df_rank, df_unrank
from cayleyrank.partition import canonical_label_order, partition_to_ranks, ranks_to_partition
from cayleyrank.product import ProductShape, product_rank, product_unrank


class InvalidDegrees(ValueError):
    pass


class DegreeMismatch(ValueError):
    """A tree does not belong to the class it was ranked against."""

    def __init__(self, message: str, vertices: Sequence[int] = ()):
        super().__init__(message)
        self.vertices = tuple(vertices)


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        n = len(degrees)
        if n < 2:
            raise InvalidDegrees("a degree sequence needs at least two vertices")
        bad = [i for i, d in enumerate(degrees, start=1) if d < 1]
        if bad:
            raise InvalidDegrees(f"degrees must be >= 1 (vertices {bad})")
        if sum(degrees) != 2 * n - 2:
            raise InvalidDegrees(f"degrees sum to {sum(degrees)}, expected 2n-2 = {2 * n - 2}")

    @property
    def n(self) -> int:
        return len(self.degrees)

    def preimage_sizes(self) -> list[int]:
        return [d - 1 for d in self.degrees]

    def multiset(self) -> DegreeMultiset:
        return DegreeMultiset.of_degrees(self.degrees)


@dataclass(frozen=True)
class DegreeMultiset:
    """Degree multiplicities; ``counts[d - 1]`` is the number of vertices of degree d."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 2:
            raise InvalidDegrees(f"vertex count must be >= 2, got {n!r}")
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != n - 1 or any(c < 0 for c in counts):
            raise InvalidDegrees(f"need {n - 1} non-negative multiplicities for degrees 1..{n - 1}")
        if sum(counts) != n:
            raise InvalidDegrees(f"multiplicities sum to {sum(counts)}, expected n = {n}")
        total = sum(d * c for d, c in enumerate(counts, start=1))
        if total != 2 * n - 2:
            raise InvalidDegrees(f"degrees sum to {total}, expected 2n-2 = {2 * n - 2}")

    @classmethod
    def from_mapping(cls, n: int, multiplicities: Mapping[int, int]) -> DegreeMultiset:
        bad = [d for d in multiplicities if not 1 <= d <= n - 1]
        if bad:
            raise InvalidDegrees(f"degrees {sorted(bad)} outside 1..{n - 1}")
        return cls(n, tuple(multiplicities.get(d, 0) for d in range(1, n)))

    @classmethod
    def of_degrees(cls, degrees: Sequence[int]) -> DegreeMultiset:
        n = len(degrees)
        if n < 2 or any(not 1 <= d <= n - 1 for d in degrees):
            raise InvalidDegrees("degrees must lie in 1..n-1")
        counts = [0] * (n - 1)
        for d in degrees:
            counts[d - 1] += 1
        return cls(n, tuple(counts))

    def as_mapping(self) -> dict[int, int]:
        return {d: c for d, c in enumerate(self.counts, start=1) if c}


DegreeSpec = Union[DegreeSequence, DegreeMultiset]


def _multinomial(total: int, parts: Sequence[int]) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def count_sequence(d: DegreeSequence) -> int:
    """Number of rooted trees with degree sequence ``d``: ``(n-2)! / prod (s_i - 1)!``."""
    return _multinomial(d.n - 2, d.preimage_sizes())


def count_multiset(d: DegreeMultiset) -> int:
    """Number of rooted trees whose degree multiset is ``d``."""
    sizes = [deg - 1 for deg, c in enumerate(d.counts, start=1) for _ in range(c)]
    return _multinomial(d.n, d.counts) * _multinomial(d.n - 2, sizes)


def _block_spaces(universe: int, sizes: Sequence[int]) -> list[DFSpace]:
    spaces = []
    for b in sizes:
        spaces.append(DFSpace(universe, b))
        universe -= b
    return spaces


class SequenceClass:
    """Precomputed data for the trees with one fixed degree sequence."""

    def __init__(self, degrees: DegreeSequence, table: BinomialTable | None = None):
        self.degrees = degrees
        n = self.n = degrees.n
        self.sizes = degrees.preimage_sizes()
        self.labels = canonical_label_order(dict(enumerate(self.sizes, start=1)))
        self.spaces = _block_spaces(n - 2, [self.sizes[v - 1] for v in self.labels])
        self.shape = ProductShape([sp.size for sp in self.spaces])
        self.table = table if table is not None and table.n_max >= n else BinomialTable(n)
        self.ground = range(2, n)
        self.count = count_sequence(degrees)
        if self.shape.total != self.count:
            raise AssertionError(f"digit shape {self.shape} does not multiply to {self.count}")

    def check_member(self, t: RootedTree) -> None:
        if t.n != self.n:
            raise DegreeMismatch(f"tree has {t.n} vertices, class has {self.n}")
        actual = degrees_of(t)
        bad = [i for i, (a, e) in enumerate(zip(actual, self.degrees.degrees), start=1) if a != e]
        if bad:
            detail = ", ".join(f"{i} (deg {actual[i - 1]}, want {self.degrees.degrees[i - 1]})" for i in bad)
            raise DegreeMismatch(f"degree mismatch at vertices {detail}", bad)

    def digits_of_table(self, f: FunctionTable) -> list[int]:
        blocks = preimage_partition(f)
        ranks = partition_to_ranks(self.ground, [blocks[v - 1] for v in self.labels])
        return [df_rank(sp, r, self.table) for sp, r in zip(self.spaces, ranks)]

    def digits(self, t: RootedTree) -> list[int]:
        self.check_member(t)
        return self.digits_of_table(theta_inverse(t))

    def rank(self, t: RootedTree) -> int:
        return product_rank(self.shape, self.digits(t))

    def table_from_digits(self, digits: Sequence[int]) -> FunctionTable:
        ranks = [df_unrank(sp, d, self.table) for sp, d in zip(self.spaces, digits)]
        blocks: list[Sequence[int]] = [()] * self.n
        for v, block in zip(self.labels, ranks_to_partition(self.ground, ranks)):
            blocks[v - 1] = block
        return table_from_preimages(self.n, blocks)

    def unrank(self, r: int) -> RootedTree:
        if not 0 <= r < self.count:
            raise RankOutOfRange(f"rank {r} outside [0, {self.count})")
        return theta(self.table_from_digits(product_unrank(self.shape, r)))


class MultisetClass:
    """Precomputed data for the trees with one fixed degree multiset."""

    def __init__(self, multiset: DegreeMultiset):
        self.multiset = multiset
        n = self.n = multiset.n
        # degree-placement blocks are labelled by preimage size d - 1
        self.placement_labels = canonical_label_order(
            {d - 1: c for d, c in enumerate(multiset.counts, start=1)}
        )
        self.placement_spaces = _block_spaces(n, [multiset.counts[v] for v in self.placement_labels])
        # nonempty preimage sizes in ascending order, shared by every member sequence
        tree_sizes = [d - 1 for d, c in enumerate(multiset.counts, start=1) if d > 1 for _ in range(c)]
        self.tree_spaces = _block_spaces(n - 2, tree_sizes)
        self.shape = ProductShape([sp.size for sp in self.placement_spaces + self.tree_spaces])
        self.table = BinomialTable(n)
        self.ground = range(1, n + 1)
        self.count = count_multiset(multiset)
        if self.shape.total != self.count:
            raise AssertionError(f"digit shape {self.shape} does not multiply to {self.count}")

    def _sequence_class(self, degrees: Sequence[int]) -> SequenceClass:
        return SequenceClass(DegreeSequence(tuple(degrees)), self.table)

    def check_member(self, t: RootedTree) -> list[int]:
        if t.n != self.n:
            raise DegreeMismatch(f"tree has {t.n} vertices, class has {self.n}")
        degrees = degrees_of(t)
        counts = [0] * (self.n - 1)
        for d in degrees:
            counts[d - 1] += 1
        if tuple(counts) != self.multiset.counts:
            raise DegreeMismatch(
                f"tree degree multiset {DegreeMultiset(self.n, tuple(counts)).as_mapping()} "
                f"differs from {self.multiset.as_mapping()}"
            )
        return degrees

    def digits(self, t: RootedTree) -> list[int]:
        degrees = self.check_member(t)
        placement: dict[int, list[int]] = {v: [] for v in self.placement_labels}
        for i, d in enumerate(degrees, start=1):
            placement[d - 1].append(i)
        ranks = partition_to_ranks(self.ground, [placement[v] for v in self.placement_labels])
        head = [df_rank(sp, r, self.table) for sp, r in zip(self.placement_spaces, ranks)]
        return head + self._sequence_class(degrees).digits_of_table(theta_inverse(t))

    def rank(self, t: RootedTree) -> int:
        return product_rank(self.shape, self.digits(t))

    def degrees_from_digits(self, digits: Sequence[int]) -> list[int]:
        ranks = [df_unrank(sp, d, self.table) for sp, d in zip(self.placement_spaces, digits)]
        degrees = [0] * self.n
        for v, block in zip(self.placement_labels, ranks_to_partition(self.ground, ranks)):
            for i in block:
                degrees[i - 1] = v + 1
        return degrees

    def unrank(self, r: int) -> RootedTree:
        if not 0 <= r < self.count:
            raise RankOutOfRange(f"rank {r} outside [0, {self.count})")
        digits = product_unrank(self.shape, r)
        k = len(self.placement_spaces)
        seq = self._sequence_class(self.degrees_from_digits(digits[:k]))
        return theta(seq.table_from_digits(digits[k:]))


@functools.lru_cache(maxsize=64)
def sequence_class(d: DegreeSequence) -> SequenceClass:
    return SequenceClass(d)


@functools.lru_cache(maxsize=64)
def multiset_class(d: DegreeMultiset) -> MultisetClass:
    return MultisetClass(d)


def class_for(d: DegreeSpec) -> SequenceClass | MultisetClass:
    if isinstance(d, DegreeSequence):
        return sequence_class(d)
    if isinstance(d, DegreeMultiset):
        return multiset_class(d)
    raise TypeError(f"expected DegreeSequence or DegreeMultiset, got {type(d).__name__}")


def rank_in_sequence_class(t: RootedTree, d: DegreeSequence) -> int:
    return sequence_class(d).rank(t)


def unrank_in_sequence_class(d: DegreeSequence, r: int) -> RootedTree:
    return sequence_class(d).unrank(r)


def rank_in_multiset_class(t: RootedTree, d: DegreeMultiset) -> int:
    return multiset_class(d).rank(t)


def unrank_in_multiset_class(d: DegreeMultiset, r: int) -> RootedTree:
    return multiset_class(d).unrank(r)


def _rng(seed: int | random.Random | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def sample_uniform(d: DegreeSpec, seed: int | random.Random | None = None) -> RootedTree:
    """Draw one tree uniformly from the class of ``d``.

    ``random.Random.randrange`` draws by rejection on ``getrandbits`` blocks,
    so large class sizes carry no modulo bias.  Pass a ``random.Random`` to
    continue an existing stream; an int seeds a fresh one.
    """
    cls = class_for(d)
    return cls.unrank(_rng(seed).randrange(cls.count))


def sample_many(d: DegreeSpec, k: int, seed: int | random.Random | None = None) -> list[RootedTree]:
    cls = class_for(d)
    rng = _rng(seed)
    return [cls.unrank(rng.randrange(cls.count)) for _ in range(k)]
