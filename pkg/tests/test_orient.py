from itertools import product

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, to_nx, trees
from wienerkit import families as fam
from wienerkit.core import Graph, chromatic_number, wiener
from wienerkit.enumerate import Shard
from wienerkit.errors import BudgetError, GraphError
from wienerkit.orient import (Digraph, converse, core_vertices, digraph_wiener, directed_cycle, from_graph,
                              is_acyclic, is_no_zig_zag, is_strongly_connected, tau, tau_graph, total_increment,
                              wiener_increment)
from wienerkit.orient import named
from wienerkit.orient.search import (code_of, code_of_digraph, coloring_code, coloring_induced_orientations,
                                     coloring_sweep, directions_of, enumerate_orientations, evaluate_codes,
                                     iter_digraphs, orient, reference_aggregate, w_max, w_min)


def to_nx_di(d: Digraph) -> nx.DiGraph:
    h = nx.DiGraph()
    h.add_nodes_from(range(d.n))
    h.add_edges_from(d.arcs())
    return h


def nx_digraph_wiener(d):
    return sum(sum(row.values()) for _, row in nx.all_pairs_shortest_path_length(to_nx_di(d)))


@st.composite
def orientations(draw, max_n=7):
    g = draw(graphs(min_n=2, max_n=max_n))
    code = draw(st.integers(0, (1 << g.m) - 1))
    return g, code


def test_digraph_validation():
    with pytest.raises(GraphError):
        Digraph(2, (0b01, 0))
    with pytest.raises(GraphError):
        Digraph.from_arcs(2, [(0, 2)])


def test_digraph_wiener_examples():
    assert digraph_wiener(directed_cycle(4)) == 24
    star_out = from_graph(fam.star(6))
    assert all(u == 0 for u, _ in star_out.arcs())
    assert digraph_wiener(star_out) == 5


@given(orientations())
def test_digraph_wiener_matches_networkx(gc):
    g, code = gc
    d = orient(g, code)
    assert digraph_wiener(d) == nx_digraph_wiener(d)
    assert is_acyclic(d) == nx.is_directed_acyclic_graph(to_nx_di(d))
    assert is_strongly_connected(d) == nx.is_strongly_connected(to_nx_di(d))


@given(orientations())
def test_kernel_matches_python_route(gc):
    g, code = gc
    w, a, s = evaluate_codes(g, np.array([code]))
    d = orient(g, code)
    assert (int(w[0]), bool(a[0]), bool(s[0])) == (digraph_wiener(d), is_acyclic(d), is_strongly_connected(d))


@given(orientations())
def test_code_roundtrip(gc):
    g, code = gc
    assert code_of(directions_of(code, g.m)) == code
    d = orient(g, code)
    assert code_of_digraph(g, d) == code
    assert d.underlying() == g and d.is_oriented()


def test_increment_examples():
    for n in range(3, 8):
        d = directed_cycle(n)
        assert all(wiener_increment(d, u) == n * (n - 1) // 2 - 1 for u in range(n))
    sink = from_graph(fam.star(4), [1, 1, 1])
    assert wiener_increment(sink, 0) == 0


@given(orientations())
def test_total_increment_is_w_minus_arcs(gc):
    g, code = gc
    d = orient(g, code)
    assert total_increment(d) == digraph_wiener(d) - g.m


@given(graphs(min_n=2, max_n=6))
def test_total_increment_orders_like_w(g):
    codes = range(1 << g.m)
    ws = [digraph_wiener(orient(g, c)) for c in codes]
    incs = [total_increment(orient(g, c)) for c in codes]
    for i in range(len(ws)):
        for j in range(len(ws)):
            assert (ws[i] < ws[j]) == (incs[i] < incs[j])


@given(orientations())
def test_converse_involution_and_invariance(gc):
    g, code = gc
    d = orient(g, code)
    assert converse(converse(d)) == d
    assert digraph_wiener(converse(d)) == digraph_wiener(d)


def test_tau_examples():
    for n in range(2, 7):
        c = directed_cycle(n)
        assert tau(c) == n * n and tau(c, self_count=False) == n * (n - 1)
    empty = Digraph(4, (0, 0, 0, 0))
    assert tau(empty) == 4 and tau(empty, self_count=False) == 0
    assert tau_graph(fam.path(3)) == 9
    d = named.theta_321_drawn()
    # a directed 7-cycle plus one source reaching all 8 vertices
    assert tau(d) == 57 and tau(d, self_count=False) == 49


def test_strong_and_acyclic_examples():
    c = directed_cycle(5)
    assert is_strongly_connected(c) and not is_acyclic(c)
    d = named.theta_321_drawn()
    assert d.underlying() == fam.theta(3, 2, 1) or nx.is_isomorphic(to_nx(d.underlying()), to_nx(fam.theta(3, 2, 1)))
    assert not is_strongly_connected(d)


@given(orientations())
def test_strong_orientation_dominates_graph(gc):
    g, code = gc
    d = orient(g, code)
    assert digraph_wiener(d) >= g.m
    if is_strongly_connected(d):
        assert digraph_wiener(d) >= wiener(g)


def test_core_vertex_examples():
    assert len(core_vertices(named.core_example_left())) == 2
    assert core_vertices(named.core_example_right()) == frozenset()
    assert not is_no_zig_zag(named.core_example_right())
    p = from_graph(fam.path(6))
    assert core_vertices(p) == frozenset(range(6))
    with pytest.raises(GraphError):
        core_vertices(directed_cycle(4))


def test_dankelmann():
    d = named.dankelmann(6)
    assert d.underlying().is_tree() and d.n == 6 + 4 + 5 + 1
    with pytest.raises(GraphError):
        named.dankelmann(4)


def test_exhaustive_examples():
    agg = enumerate_orientations(fam.cycle(4))
    assert agg.all.count == 16 and agg.all.max == 24 and len(agg.all.argmax) == 2
    for a in agg.all.argmax:
        assert is_strongly_connected(orient(fam.cycle(4), a))
    with pytest.raises(BudgetError):
        enumerate_orientations(fam.complete(9))


def _longest(d):
    from wienerkit.orient.digraph import distance_row
    return max(max(distance_row(d, s)) for s in range(d.n))


@given(graphs(min_n=2, max_n=6))
def test_w_min_at_least_edge_count(g):
    lo = w_min(g)
    assert lo >= g.m
    short = [_longest(orient(g, c)) <= 1 for c in range(1 << g.m)]
    assert (lo == g.m) == any(short)


@given(graphs(min_n=2, max_n=6))
def test_kernel_sweep_matches_reference(g):
    a, b = enumerate_orientations(g), reference_aggregate(g)
    for x, y in ((a.all, b.all), (a.acyclic, b.acyclic), (a.strong, b.strong)):
        assert (x.count, x.max, x.min, x.argmax, x.argmin) == (y.count, y.max, y.min, sorted(y.argmax),
                                                              sorted(y.argmin))


@given(graphs(min_n=3, max_n=7), st.integers(1, 5))
def test_orientation_shards_merge(g, total):
    whole = enumerate_orientations(g)
    parts = [enumerate_orientations(g, Shard(i, total)) for i in range(total)]
    merged = parts[0]
    for p in parts[1:]:
        merged = merged.merge(p)
    assert merged.all == whole.all and merged.acyclic == whole.acyclic and merged.strong == whole.strong


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ladder_formula(n):
    g = fam.ladder(n)
    expected = (8 * n ** 3 + 3 * n * n - 5 * n + 6) // 3
    assert w_max(g) == expected == digraph_wiener(named.ladder_max(n))


def test_ladder_fixture():
    from pathlib import Path
    from wienerkit.formats import read_djson
    d = read_djson((Path(__file__).parent / "fixtures" / "ladder3_max.djson").read_text())
    assert digraph_wiener(d) == 78 == w_max(d.underlying())


@pytest.mark.parametrize("m,n", [(3, 4), (3, 6)])
def test_grid_comparison(m, n):
    assert digraph_wiener(named.grid_C(m, n)) > digraph_wiener(named.grid_D(m, n))
    assert named.grid_C(m, n).underlying() == named.grid_graph(m, n)
    assert named.grid_D(m, n).underlying() == named.grid_graph(m, n)


def test_grid_C_parity():
    with pytest.raises(GraphError):
        named.grid_C(3, 5)


def test_theta_max_small():
    for a, b, c in [(1, 1, 1), (2, 1, 0), (2, 2, 1), (3, 2, 1)]:
        assert digraph_wiener(named.theta_max(a, b, c)) == w_max(fam.theta(a, b, c))


def test_directed_cycle_maximal_n3():
    best = max(digraph_wiener(d) for d in iter_digraphs(3))
    hits = [d for d in iter_digraphs(3) if digraph_wiener(d) == best]
    assert best == digraph_wiener(directed_cycle(3)) == 9
    # the two directed triangles are the only labelled maximisers
    assert len(hits) == 2 and all(is_strongly_connected(d) and d.arc_count == 3 for d in hits)


# colouring-induced orientations

def test_coloring_examples():
    k3 = fam.complete(3)
    codes = list(coloring_induced_orientations(k3, 3))
    assert len(codes) == 6
    for c in codes:
        d = orient(k3, c)
        # transitive tournament: three reachable pairs, all adjacent
        assert is_acyclic(d) and digraph_wiener(d) == nx_digraph_wiener(d) == 3
    g = fam.cycle(6)
    for c in coloring_induced_orientations(g, 2):
        d = orient(g, c)
        # every vertex is a source or a sink
        assert all(d.out_degree(v) in (0, 2) for v in range(6))
    sweep = coloring_sweep(fam.cycle(5), 2)
    assert sweep.below_chromatic and sweep.colorings == 0 and sweep.min is None


def test_coloring_code_rejects_improper():
    with pytest.raises(GraphError):
        coloring_code(fam.path(2), (1, 1))


@given(graphs(min_n=2, max_n=7), st.integers(0, 1))
def test_coloring_orientations_acyclic(g, extra):
    k = chromatic_number(g) + extra
    for c in coloring_induced_orientations(g, k):
        assert is_acyclic(orient(g, c))


@given(trees(min_n=2, max_n=8))
def test_tree_two_coloring_layered(t):
    for c in coloring_induced_orientations(t, 2):
        d = orient(t, c)
        assert is_acyclic(d) and digraph_wiener(d) == t.m


def _unicyclic(n, c):
    g = fam.cycle(c)
    edges = g.edges() + [(i - 1 if i - 1 >= c else i % c, i) for i in range(c, n)]
    return Graph.from_edges(n, edges)


@pytest.mark.parametrize("g", [
    fam.cycle(5), fam.cycle(7), _unicyclic(7, 3), _unicyclic(8, 5),
    fam.dumbbell(1, 3, 1).add_edges([]), fam.cartesian_product(fam.cycle(3), fam.path(2)),
    fam.cartesian_product(fam.cycle(4), fam.path(2)), fam.cartesian_product(fam.cycle(5), fam.path(2)),
], ids=["C5", "C7", "uni7", "uni8", "tri-pendant", "prism3", "prism4", "prism5"])
def test_coloring_min_attains_w_min(g):
    assert coloring_sweep(g).min == w_min(g)


def test_coloring_counterexample():
    g = fam.coloring_counterexample()
    sweep = coloring_sweep(g)
    assert sweep.k == 3 and sweep.colorings > 0
    assert w_min(g) == 26 < sweep.min == 27
