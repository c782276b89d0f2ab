"""
Poset Partitions

Provides:
- monotone_partitions: preorders extending a poset's order
- regular_partitions: set partitions with an acyclic block digraph
- partition_to_poset, regular_to_poset, as_preorder: quotients and conversions
- linear_extensions: total monotone partitions, as chains
"""

from .monotone import candidate_pairs, iter_monotone_partitions, monotone_partitions
from .quotient import (
    as_preorder,
    block_label,
    block_labels,
    describe_partition,
    linear_extensions,
    partition_to_poset,
    quotient_of,
    regular_to_poset,
)
from .regular import (
    bell_count,
    block_digraph,
    is_regular,
    iter_regular_partitions,
    partition_from_rgs,
    regular_partitions,
    restricted_growth_strings,
)

__all__ = [
    "candidate_pairs",
    "iter_monotone_partitions",
    "monotone_partitions",
    "as_preorder",
    "block_label",
    "block_labels",
    "describe_partition",
    "linear_extensions",
    "partition_to_poset",
    "quotient_of",
    "regular_to_poset",
    "bell_count",
    "block_digraph",
    "is_regular",
    "iter_regular_partitions",
    "partition_from_rgs",
    "regular_partitions",
    "restricted_growth_strings",
]
