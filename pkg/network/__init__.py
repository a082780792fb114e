# network/__init__.py

"""
Network Module
Immutable weighted graphs, bitset node sets, partitions and the benchmark
graph generators used by the score and search packages.
"""

from .nodeset import NodeSet
from .graph import WeightedGraph
from .partition import Partition, iter_partitions, iter_partitions_of
from .edge_list import parse_edge_list, from_edge_list, format_edge_list, read_edge_list, write_edge_list
from .generators import (
    CliqueUnion,
    half_regular,
    partition_graph,
    noisy_partition_graph,
    clique_union,
)
from .rng import make_rng

__all__ = [
    'NodeSet',
    'WeightedGraph',
    'Partition',
    'iter_partitions',
    'iter_partitions_of',
    'parse_edge_list',
    'from_edge_list',
    'format_edge_list',
    'read_edge_list',
    'write_edge_list',
    'CliqueUnion',
    'half_regular',
    'partition_graph',
    'noisy_partition_graph',
    'clique_union',
    'make_rng',
]
