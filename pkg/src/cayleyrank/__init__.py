"""Rank, unrank, count and sample rooted Cayley trees with a fixed degree
sequence or degree multiset."""

from cayleyrank.bijection import (
    FunctionTable,
    InvalidStructure,
    RootedTree,
    cycle_decomposition,
    degrees_of,
    preimage_partition,
    theta,
    theta_inverse,
)
from cayleyrank.dfcodec import BinomialTable, DFSpace, RankOutOfRange, df_rank, df_unrank
from cayleyrank.partition import canonical_block_order, partition_to_ranks, ranks_to_partition
from cayleyrank.product import ProductShape, product_rank, product_unrank
from cayleyrank.treerank import (
    DegreeMismatch,
    DegreeMultiset,
    DegreeSequence,
    InvalidDegrees,
    MultisetClass,
    SequenceClass,
    count_multiset,
    count_sequence,
    rank_in_multiset_class,
    rank_in_sequence_class,
    sample_uniform,
    unrank_in_multiset_class,
    unrank_in_sequence_class,
)

__all__ = [
    "BinomialTable",
    "DFSpace",
    "DegreeMismatch",
    "DegreeMultiset",
    "DegreeSequence",
    "FunctionTable",
    "InvalidDegrees",
    "InvalidStructure",
    "MultisetClass",
    "ProductShape",
    "RankOutOfRange",
    "RootedTree",
    "SequenceClass",
    "canonical_block_order",
    "count_multiset",
    "count_sequence",
    "cycle_decomposition",
    "degrees_of",
    "df_rank",
    "df_unrank",
    "partition_to_ranks",
    "preimage_partition",
    "product_rank",
    "product_unrank",
    "rank_in_multiset_class",
    "rank_in_sequence_class",
    "ranks_to_partition",
    "sample_uniform",
    "theta",
    "theta_inverse",
    "unrank_in_multiset_class",
    "unrank_in_sequence_class",
]
