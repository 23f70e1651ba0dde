from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from wienerkit import families as fam
from wienerkit.core import Graph, circumference
from wienerkit.enumerate import regular_graphs
from wienerkit.errors import DisconnectedGraphError, GraphError, UndefinedRemovalError
from wienerkit.soltes import delta_for_set, min_degree_guard_check, soltes_profile, z_level_vertices


def nx_deltas(g):
    h = to_nx(g)
    w = nx.wiener_index(h)
    out = []
    for v in range(g.n):
        sub = h.copy()
        sub.remove_node(v)
        out.append(round(w - nx.wiener_index(sub)) if nx.is_connected(sub) else None)
    return tuple(out)


def test_c11_is_soltes():
    prof = soltes_profile(fam.cycle(11))
    assert prof.is_soltes_graph and prof.deltas == (0,) * 11
    assert z_level_vertices(fam.cycle(11), 1) == frozenset()


@pytest.mark.parametrize("n", [n for n in range(3, 21) if n != 11])
def test_other_cycles_are_not(n):
    assert not soltes_profile(fam.cycle(n)).is_soltes_graph


def test_soltes_B_proportion():
    for k in (2, 3):
        prof = soltes_profile(fam.soltes_B(k))
        assert prof.proportion == Fraction(2 * k, 5 * k + 6)
    assert len(soltes_profile(fam.soltes_B(2)).soltes_vertices) == 4


@given(graphs(min_n=3, max_n=9))
def test_deltas_match_networkx(g):
    prof = soltes_profile(g)
    assert prof.deltas == nx_deltas(g)
    cuts = set(nx.articulation_points(to_nx(g)))
    assert prof.undefined_vertices == cuts
    assert not prof.soltes_vertices & cuts
    for v in range(g.n):
        if g.degree(v) == 1:
            assert prof.deltas[v] > 0


@given(graphs(min_n=3, max_n=9))
def test_short_circumference_has_no_soltes_vertex(g):
    if circumference(g) <= 4:
        assert not soltes_profile(g).soltes_vertices


@given(graphs(min_n=3, max_n=9))
def test_min_degree_guard(g):
    res = min_degree_guard_check(g)
    assert res.applies == (2 * g.min_degree >= g.n)
    assert res.holds


def test_delta_for_set_examples():
    assert delta_for_set(fam.cycle(7), []) == 0
    assert delta_for_set(fam.cycle(11), [3]) == 0
    assert delta_for_set(fam.complete(5), [0]) == 4
    with pytest.raises(UndefinedRemovalError):
        delta_for_set(fam.path(5), [2])
    with pytest.raises(DisconnectedGraphError):
        delta_for_set(Graph.empty(3), [])


def test_z_levels():
    for n in range(3, 8):
        assert z_level_vertices(fam.complete(n), n - 1) == frozenset(range(n))
    assert z_level_vertices(fam.cycle(11), 0) == soltes_profile(fam.cycle(11)).soltes_vertices


def test_guard_examples():
    assert min_degree_guard_check(fam.complete(6)) == (True, True)
    assert not min_degree_guard_check(fam.cycle(5)).applies
    with pytest.raises(GraphError):
        soltes_profile(fam.path(2))


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_small_cubic_graphs_have_no_soltes_vertex(n):
    for g in regular_graphs(n, 3):
        assert not soltes_profile(g).soltes_vertices
