from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, to_nx, trees
from wienerkit import families as fam
from wienerkit.core import Graph, distance_matrix, wiener
from wienerkit.enumerate import Shard, iter_trees
from wienerkit.errors import BudgetError, DisconnectedGraphError, GraphError, SizeGuardError
from wienerkit.signed import (SignedGraph, alternating_path, canceling_report, exists_k_canceling, hop_parity_ok,
                              is_k_canceling, min_signed_wiener, signed_distance, signed_distance_reference,
                              signed_wiener)


def oracle_distance(s: SignedGraph, u, v):
    sign = {}
    for (a, b), x in zip(s.edges, s.signs):
        sign[a, b] = sign[b, a] = x
    return min(abs(sum(sign[p[i], p[i + 1]] for i in range(len(p) - 1)))
               for p in nx.all_simple_paths(to_nx(s.base), u, v))


def oracle_wiener(s: SignedGraph):
    return sum(oracle_distance(s, u, v) for u, v in combinations(range(s.base.n), 2))


@st.composite
def signed_graphs(draw, max_n=7, tree=False):
    g = draw(trees(min_n=2, max_n=max_n) if tree else graphs(min_n=2, max_n=max_n))
    return SignedGraph(g, tuple(draw(st.sampled_from((1, -1))) for _ in range(g.m)))


def test_signed_graph_validation():
    with pytest.raises(GraphError):
        SignedGraph(fam.path(3), (1,))
    with pytest.raises(GraphError):
        SignedGraph(fam.path(3), (1, 0))


def test_signed_distance_examples():
    t = fam.broom_T(7, 3)
    s = SignedGraph.constant(t)
    d = distance_matrix(t)
    assert all(signed_distance(s, u, v) == d[u][v] for u, v in combinations(range(7), 2))
    c4 = fam.cycle(4)
    around = {(0, 1): 1, (1, 2): -1, (2, 3): 1, (0, 3): -1}
    s = SignedGraph(c4, tuple(around[e] for e in c4.edges()))
    assert signed_distance(s, 0, 2) == 0 and signed_distance(s, 1, 3) == 0


def test_signed_distance_errors():
    s = SignedGraph.constant(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(DisconnectedGraphError):
        signed_distance(s, 0, 3)
    with pytest.raises(GraphError):
        signed_distance(s, 1, 1)
    with pytest.raises(SizeGuardError):
        signed_distance(SignedGraph.constant(fam.cycle(15)), 0, 7)


def test_signed_wiener_examples():
    assert signed_wiener(alternating_path(3)) == 2
    assert signed_wiener(alternating_path(4)) == 4
    assert signed_wiener(SignedGraph.constant(fam.petersen())) == wiener(fam.petersen())
    with pytest.raises(DisconnectedGraphError):
        signed_wiener(SignedGraph.constant(Graph.empty(2)))


@given(signed_graphs())
def test_signed_distance_matches_path_oracle(s):
    n = s.base.n
    for u, v in combinations(range(n), 2):
        got = signed_distance(s, u, v)
        assert got == signed_distance_reference(s, u, v) == oracle_distance(s, u, v)


@given(signed_graphs(max_n=9))
def test_constant_signature_gives_wiener(s):
    g = s.base
    assert signed_wiener(SignedGraph.constant(g)) == wiener(g)
    assert signed_wiener(SignedGraph.constant(g, -1)) == wiener(g)


@given(signed_graphs(max_n=9))
def test_global_flip_invariance(s):
    assert signed_wiener(s.negate()) == signed_wiener(s)


@given(signed_graphs(max_n=12, tree=True))
def test_tree_parity(s):
    d = distance_matrix(s.base)
    for u, v in combinations(range(s.base.n), 2):
        assert (signed_distance(s, u, v) - d[u][v]) % 2 == 0
    assert hop_parity_ok(s)


@given(signed_graphs(max_n=8, tree=True))
def test_tree_route_matches_oracle(s):
    assert signed_wiener(s) == oracle_wiener(s)


def test_code_roundtrip():
    g = fam.cycle(5)
    for code in range(1 << g.m):
        assert SignedGraph.from_code(g, code).code() == code


def test_min_signed_examples():
    assert min_signed_wiener(fam.path(2)).value == 1
    for n in range(2, 10):
        assert min_signed_wiener(fam.path(n)).value == signed_wiener(alternating_path(n))
    with pytest.raises(BudgetError):
        min_signed_wiener(fam.complete(8))
    with pytest.raises(DisconnectedGraphError):
        min_signed_wiener(Graph.empty(3))


@given(graphs(min_n=2, max_n=6))
def test_min_signed_matches_brute_force(g):
    values = {c: oracle_wiener(SignedGraph.from_code(g, c)) for c in range(1 << g.m)}
    best = min(values.values())
    res = min_signed_wiener(g)
    assert res.value == best
    assert sorted(res.argmin) == sorted(c for c, v in values.items() if v == best)


@pytest.mark.parametrize("n", range(2, 9))
def test_tree_double_star_conjecture(n):
    lower = min_signed_wiener(fam.path(n)).value
    upper = max(min_signed_wiener(t).value for t in fam.double_stars(n))
    for t in iter_trees(n):
        assert lower <= min_signed_wiener(t).value <= upper


@given(graphs(min_n=3, max_n=6), st.integers(1, 4))
def test_signature_shards_merge(g, total):
    whole = min_signed_wiener(g)
    parts = [min_signed_wiener(g, Shard(i, total)) for i in range(total)]
    best = min(p.value for p in parts if p.visited)
    hits = sorted(c for p in parts if p.visited and p.value == best for c in p.argmin)
    assert best == whole.value and hits == sorted(whole.argmin)
    assert sum(p.visited for p in parts) == whole.visited


def test_canceling_examples():
    s = exists_k_canceling(fam.complete(6), 1)
    assert s is not None and is_k_canceling(s, 1) and signed_wiener(s) == 0
    b = exists_k_canceling(fam.blowup(fam.cycle(5), [2] * 5), 1)
    assert b is not None and signed_wiener(b) == 0
    assert exists_k_canceling(fam.broom_T(7, 3), 1) is None
    assert exists_k_canceling(fam.cliqued_bipartite(fam.cycle(6)), 1) is not None
    with pytest.raises(GraphError):
        canceling_report(s, 0)


def test_undefined_removal_is_reported():
    # a hub joined to two triangles: removing the hub disconnects the rest
    g = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 5), (2, 4), (2, 6),
                             (3, 5), (4, 6)])
    s = SignedGraph(g, (1, 1, 1, 1, -1, -1, -1, 1, -1, 1, -1, -1))
    assert is_k_canceling(s, 1)
    rep = canceling_report(s, 2)
    assert (0,) in rep.undefined and (0,) not in rep.failures and not rep.ok


def test_signed_vertex_deletion():
    s = alternating_path(5)
    sub = s.delete_vertices([0])
    assert sub.signs == (-1, 1, -1)
