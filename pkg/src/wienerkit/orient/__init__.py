"""Digraphs, orientation search and the named orientations."""

from wienerkit.orient.digraph import (Digraph, converse, core_vertices, digraph_wiener, from_graph, is_acyclic,
                                      is_no_zig_zag, is_strongly_connected, tau, tau_graph, total_increment,
                                      wiener_increment)
from wienerkit.orient.named import dankelmann, directed_cycle, grid_C, grid_D, ladder_max, theta_max
from wienerkit.orient.search import (OrientationAggregate, coloring_induced_orientations, coloring_sweep,
                                     enumerate_orientations, orient, w_max, w_min)

__all__ = [
    "Digraph", "converse", "core_vertices", "digraph_wiener", "from_graph", "is_acyclic", "is_no_zig_zag",
    "is_strongly_connected", "tau", "tau_graph", "total_increment", "wiener_increment",
    "dankelmann", "directed_cycle", "grid_C", "grid_D", "ladder_max", "theta_max",
    "OrientationAggregate", "coloring_induced_orientations", "coloring_sweep", "enumerate_orientations",
    "orient", "w_max", "w_min",
]
