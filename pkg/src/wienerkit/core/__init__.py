"""Graph substrate and classical invariants."""

from wienerkit.core.canon import (automorphism_orbits, canonical_form, canonical_graph, canonical_labeling,
                                  is_isomorphic, is_vertex_transitive)
from wienerkit.core.coloring import chromatic_number, proper_colorings
from wienerkit.core.distance import (degree_upper_bound, diameter, distance_counts, distance_matrix,
                                     eccentricity_profile, radius, transmissions, wiener, wiener_dimension)
from wienerkit.core.graph import MAX_VERTICES, Graph, delete_vertices, induced_subgraph
from wienerkit.core.structure import (BlockDecomposition, blocks, cartesian_product, circumference, cut_vertices,
                                      is_biconnected, is_bipartite, iterated_line_graph, line_graph)

__all__ = [
    "MAX_VERTICES", "Graph", "delete_vertices", "induced_subgraph",
    "distance_matrix", "transmissions", "wiener", "wiener_dimension", "distance_counts",
    "eccentricity_profile", "diameter", "radius", "degree_upper_bound",
    "BlockDecomposition", "blocks", "cut_vertices", "is_biconnected", "is_bipartite",
    "line_graph", "iterated_line_graph", "cartesian_product", "circumference",
    "chromatic_number", "proper_colorings",
    "canonical_labeling", "canonical_graph", "canonical_form", "automorphism_orbits",
    "is_vertex_transitive", "is_isomorphic",
]
