from itertools import combinations, permutations, product
from math import comb

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import from_nx, graphs, to_nx, trees
from wienerkit import families as fam
from wienerkit.core import (Graph, automorphism_orbits, blocks, canonical_form, cartesian_product, chromatic_number,
                            circumference, cut_vertices, degree_upper_bound, delete_vertices, diameter,
                            distance_counts, distance_matrix, eccentricity_profile, is_biconnected, is_bipartite,
                            is_isomorphic, is_vertex_transitive, iterated_line_graph, line_graph, proper_colorings,
                            radius, transmissions, wiener, wiener_dimension)
from wienerkit.errors import CapacityError, DisconnectedGraphError, GraphError, SizeGuardError


# graph container

def test_graph_validation():
    with pytest.raises(CapacityError):
        Graph.empty(0)
    with pytest.raises(CapacityError):
        Graph.empty(65)
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # not symmetric
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0))  # self-loop
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_edit_roundtrip():
    g = fam.cycle(5)
    assert g.remove_edges([(0, 1)]).add_edges([(1, 0)]) == g
    assert g.complement().complement() == g
    assert g.m == 5 and g.degrees() == [2] * 5


# distances

def test_distance_examples():
    assert distance_matrix(fam.path(4))[0][3] == 3
    d = distance_matrix(fam.complete(5))
    assert all(d[i][j] == 1 for i in range(5) for j in range(5) if i != j)
    assert distance_matrix(fam.cycle(5))[0][2] == 2


def test_wiener_examples():
    assert wiener(fam.path(4)) == 10
    assert wiener(fam.star(5)) == 16
    assert wiener(fam.complete(5)) == 10
    assert wiener(fam.cycle(5)) == 15


def test_wiener_disconnected_is_error():
    with pytest.raises(DisconnectedGraphError, match="disconnected"):
        wiener(Graph.empty(2))
    assert distance_matrix(Graph.empty(2))[0][1] is None


def test_transmission_examples():
    assert transmissions(fam.cycle(6)) == [9] * 6
    assert sorted(transmissions(fam.star(4))) == [3, 5, 5, 5]
    assert transmissions(fam.path(2)) == [1, 1]


def test_wiener_dimension_examples():
    assert wiener_dimension(fam.cycle(6)) == 1
    assert wiener_dimension(fam.star(4)) == 2
    assert wiener_dimension(fam.path(5)) == 3


def test_eccentricity_examples():
    assert (diameter(fam.path(5)), radius(fam.path(5))) == (4, 2)
    assert (diameter(fam.complete(4)), radius(fam.complete(4))) == (1, 1)
    assert (diameter(fam.petersen()), radius(fam.petersen())) == (2, 2)


@given(graphs(max_n=10))
def test_distances_match_networkx(g):
    h = to_nx(g)
    assert wiener(g) == round(nx.wiener_index(h))
    lengths = dict(nx.all_pairs_shortest_path_length(h))
    assert transmissions(g) == [sum(lengths[v].values()) for v in range(g.n)]
    prof = eccentricity_profile(g)
    assert list(prof.eccentricities) == [nx.eccentricity(h, v) for v in range(g.n)]
    counts = distance_counts(g)
    assert sum(counts.values()) == comb(g.n, 2)
    assert sum(k * c for k, c in counts.items()) == wiener(g)


@given(graphs(max_n=10))
def test_transmission_sum_is_twice_wiener(g):
    assert sum(transmissions(g)) == 2 * wiener(g)


@given(graphs(max_n=10))
def test_folklore_bounds(g):
    assert comb(g.n, 2) <= wiener(g) <= comb(g.n + 1, 3)


@given(trees(max_n=12))
def test_tree_bounds(t):
    assert (t.n - 1) ** 2 <= wiener(t) <= comb(t.n + 1, 3)


@given(graphs(max_n=10))
def test_radius_diameter_chain(g):
    r, d = radius(g), diameter(g)
    assert r <= d <= 2 * r


@given(graphs(min_n=3, max_n=9), st.data())
def test_edge_addition_and_removal_monotone(g, data):
    non_edges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    if non_edges:
        e = data.draw(st.sampled_from(non_edges))
        assert wiener(g.add_edges([e])) < wiener(g)
    bridges = {frozenset(e) for e in nx.bridges(to_nx(g))}
    removable = [e for e in g.edges() if frozenset(e) not in bridges]
    if removable:
        e = data.draw(st.sampled_from(removable))
        assert wiener(g.remove_edges([e])) > wiener(g)


@given(graphs(max_n=9))
def test_degree_upper_bound_holds(g):
    assert wiener(g) <= degree_upper_bound(g)


# structure

def test_block_examples():
    t = fam.broom_T(7, 3)
    b = blocks(t)
    assert b.count == 6 and all(len(x) == 2 for x in b.blocks)
    assert blocks(fam.cycle(9)).count == 1
    # two triangles joined through one path vertex by two bridges
    assert blocks(fam.dumbbell(1, 3, 3)).count == 4


@given(graphs(max_n=10))
def test_blocks_match_networkx(g):
    h = to_nx(g)
    b = blocks(g)
    if g.n > 1:
        assert set(b.blocks) == {frozenset(c) for c in nx.biconnected_components(h)}
    assert b.cut_vertices == frozenset(nx.articulation_points(h)) == cut_vertices(g)
    assert sum(b.block_edge_counts) == g.m
    assert is_biconnected(g) == (g.n > 2 and nx.is_biconnected(h))
    assert is_bipartite(g) == nx.is_bipartite(h)


def test_line_graph_examples():
    assert is_isomorphic(line_graph(fam.star(4)), fam.complete(3))
    assert is_isomorphic(line_graph(fam.path(5)), fam.path(4))
    assert is_isomorphic(line_graph(fam.cycle(7)), fam.cycle(7))
    assert is_isomorphic(iterated_line_graph(fam.path(5), 2), fam.path(3))
    assert is_isomorphic(iterated_line_graph(fam.star(4), 3), fam.cycle(3))
    g = fam.petersen()
    assert iterated_line_graph(g, 0) == g


def test_line_graph_errors():
    with pytest.raises(GraphError):
        line_graph(Graph.empty(3))
    with pytest.raises(GraphError):
        iterated_line_graph(fam.path(3), 3)
    with pytest.raises(CapacityError):
        line_graph(fam.complete(12))


@given(graphs(min_n=2, max_n=8))
def test_line_graph_matches_networkx(g):
    assert nx.is_isomorphic(to_nx(line_graph(g)), nx.line_graph(to_nx(g)))


def test_cartesian_examples():
    assert is_isomorphic(cartesian_product(fam.path(2), fam.path(2)), fam.cycle(4))
    assert cartesian_product(fam.path(6), fam.path(2)) == fam.ladder(6)
    k = cartesian_product(fam.complete(4), fam.path(2))
    assert (k.n, k.m) == (8, 16)
    with pytest.raises(CapacityError):
        cartesian_product(fam.path(9), fam.path(8))


@given(graphs(max_n=5), graphs(max_n=5))
def test_cartesian_matches_networkx(g, h):
    assert nx.is_isomorphic(to_nx(cartesian_product(g, h)), nx.cartesian_product(to_nx(g), to_nx(h)))


@given(graphs(max_n=9))
def test_circumference_matches_cycle_listing(g):
    cycles = [len(c) for c in nx.simple_cycles(to_nx(g))]
    assert circumference(g) == max(cycles, default=0)


def test_circumference_guard():
    with pytest.raises(SizeGuardError):
        circumference(fam.cycle(13))


def _brute_colorings(g, k):
    return [c for c in product(range(1, k + 1), repeat=g.n) if all(c[u] != c[v] for u, v in g.edges())]


def test_chromatic_examples():
    assert chromatic_number(fam.cycle(6)) == 2
    assert chromatic_number(fam.cycle(5)) == 3
    assert chromatic_number(fam.coloring_counterexample()) == 3
    assert chromatic_number(Graph.empty(3)) == 1


@given(graphs(max_n=7, connected=False))
def test_colorings_match_brute_force(g):
    chi = chromatic_number(g)
    assert _brute_colorings(g, chi) and not _brute_colorings(g, chi - 1)
    assert sorted(proper_colorings(g, chi)) == sorted(_brute_colorings(g, chi))


# canonical forms

def test_canonical_examples():
    p = fam.path(4)
    forms = {canonical_form(p.relabel(list(perm))) for perm in permutations(range(4))}
    assert len(forms) == 1
    assert canonical_form(fam.cycle(4)) != canonical_form(fam.star(4))
    with pytest.raises(SizeGuardError):
        canonical_form(fam.path(17))


def test_orbit_examples():
    assert is_vertex_transitive(fam.circulant(8, [1, 2]))
    assert set(automorphism_orbits(fam.star(4))) == {frozenset({0}), frozenset({1, 2, 3})}
    assert is_vertex_transitive(fam.petersen())
    assert not is_vertex_transitive(fam.path(3))


@given(graphs(max_n=8, connected=False), st.data())
def test_canonical_form_permutation_invariant(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(min_n=4, max_n=7, connected=False), graphs(min_n=4, max_n=7, connected=False))
def test_isomorphism_matches_networkx(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert is_isomorphic(g, h) == same
    assert (canonical_form(g) == canonical_form(h)) == same


@given(graphs(max_n=8, connected=False))
def test_orbits_match_networkx(g):
    h = to_nx(g)
    images = {v: set() for v in range(g.n)}
    for auto in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter():
        for v, w in auto.items():
            images[v].add(w)
    assert set(automorphism_orbits(g)) == {frozenset(s) for s in images.values()}


# vertex deletion

def test_delete_vertices_examples():
    assert is_isomorphic(delete_vertices(fam.cycle(11), [4]), fam.path(10))
    assert delete_vertices(fam.complete(5), [0]) == fam.complete(4)
    s = delete_vertices(fam.star(4), [0])
    assert s.m == 0 and s.n == 3 and not s.is_connected()


def test_from_nx_roundtrip():
    g = fam.petersen()
    assert from_nx(to_nx(g)) == g
