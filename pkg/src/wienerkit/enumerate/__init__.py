"""Isomorphism-free generation of small graph classes and extremal search."""

from wienerkit.enumerate.augment import Shard, iter_connected, iter_regular, iter_trees, visit_all
from wienerkit.enumerate.regular import regular_graphs
from wienerkit.enumerate.search import (CHEMICAL, ClassFilter, SearchRecord, blocks_class, connected_graphs,
                                        extremal_search, trees)

__all__ = [
    "Shard", "iter_connected", "iter_trees", "iter_regular", "visit_all", "regular_graphs",
    "CHEMICAL", "ClassFilter", "SearchRecord", "connected_graphs", "trees", "blocks_class", "extremal_search",
]
