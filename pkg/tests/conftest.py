import networkx as nx
from hypothesis import HealthCheck, settings, strategies as st

from wienerkit.core import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=True):
    """Random labelled graph; connected ones start from a random spanning tree."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = set()
    if connected:
        for v in range(1, n):
            chosen.add((draw(st.integers(0, v - 1)), v))
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    density = draw(st.integers(0, 3))
    for p, bit in zip(pairs, extra):
        if bit and density and draw(st.integers(0, 3)) < density:
            chosen.add(p)
    perm = draw(st.permutations(list(range(n))))
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in chosen])


@st.composite
def trees(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
