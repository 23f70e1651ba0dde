from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, to_nx
from wienerkit import families as fam
from wienerkit.core import Graph
from wienerkit.enumerate import iter_connected
from wienerkit.formats import (FormatError, graph6_decode, graph6_encode, read_djson, read_graph6_lines,
                               read_sjson, write_djson, write_sjson)
from wienerkit.orient import directed_cycle
from wienerkit.signed import SignedGraph, alternating_path

FIXTURES = Path(__file__).parent / "fixtures"


def test_graph6_examples():
    assert graph6_encode(fam.path(2)) == "A_"
    assert graph6_encode(Graph.empty(1)) == "@"
    assert graph6_decode("A_") == fam.path(2)
    assert graph6_decode(">>graph6<<A_\n") == fam.path(2)


@given(graphs(max_n=20, connected=False))
def test_graph6_matches_networkx(g):
    ours = graph6_encode(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert graph6_decode(ours) == g


@pytest.mark.parametrize("n", range(1, 8))
def test_graph6_roundtrip_enumerated(n):
    for g in iter_connected(n):
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_errors():
    with pytest.raises(FormatError, match="long"):
        graph6_decode("~" + "?" * 10)
    with pytest.raises(FormatError, match="padding"):
        graph6_decode("A`")
    with pytest.raises(FormatError, match="outside"):
        graph6_decode("A\x7f")
    with pytest.raises(FormatError, match="data bytes"):
        graph6_decode("C~~")
    with pytest.raises(FormatError):
        graph6_decode("")
    with pytest.raises(FormatError):
        graph6_encode(fam.path(63))


def test_read_graph6_lines():
    text = "A_\n\nBw\n"
    gs = read_graph6_lines(text)
    assert gs[0] == fam.path(2) and gs[1].m == 3


def test_djson_roundtrip():
    c3 = directed_cycle(3)
    text = write_djson(c3, name="C3")
    assert read_djson(text) == c3
    assert write_djson(read_djson(text), name="C3") == text


def test_sjson_roundtrip():
    s = alternating_path(5)
    assert s.signs == (1, -1, 1, -1)
    text = write_sjson(s)
    assert read_sjson(text) == s
    assert read_sjson((FIXTURES / "alternating_p5.sjson").read_text()) == s


def test_sjson_edge_order_is_normalised():
    text = '{"n": 3, "edges": [[2, 1], [0, 1]], "signs": [-1, 1]}'
    s = read_sjson(text)
    assert s.edges == [(0, 1), (1, 2)] and s.signs == (1, -1)


@given(graphs(min_n=2, max_n=9), st.data())
def test_sjson_random_roundtrip(g, data):
    s = SignedGraph(g, tuple(data.draw(st.sampled_from((1, -1))) for _ in range(g.m)))
    assert read_sjson(write_sjson(s)) == s


@pytest.mark.parametrize("text,where", [
    ("{", "invalid JSON"),
    ("[]", "top level"),
    ('{"n": 0, "arcs": []}', "'n'"),
    ('{"n": 2, "arcs": {}}', "'arcs'"),
    ('{"n": 2, "arcs": [[0, 2]]}', "arcs[0]"),
    ('{"n": 2, "arcs": [[0]]}', "arcs[0]"),
    ('{"n": 2, "arcs": [[1, 1]]}', "self-loop"),
    ('{"n": 2, "arcs": [], "name": 3}', "'name'"),
])
def test_djson_errors(text, where):
    with pytest.raises(FormatError, match=where.replace("[", r"\[").replace("]", r"\]")):
        read_djson(text)


@pytest.mark.parametrize("text,where", [
    ('{"n": 2, "edges": [[0, 1]], "signs": []}', "signs"),
    ('{"n": 2, "edges": [[0, 1]], "signs": [2]}', r"signs\[0\]"),
    ('{"n": 2, "edges": [[0, 1]], "signs": [true]}', r"signs\[0\]"),
    ('{"n": 2, "edges": [[0, 1], [1, 0]], "signs": [1, 1]}', "duplicate"),
])
def test_sjson_errors(text, where):
    with pytest.raises(FormatError, match=where):
        read_sjson(text)
