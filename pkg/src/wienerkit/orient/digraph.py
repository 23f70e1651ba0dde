"""Digraphs with out-neighbour bit-rows and the directed Wiener index.

Directed distance d(u, v) is the length of a shortest directed u->v path and
0 when v is unreachable from u; the Wiener index sums it over ordered pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from wienerkit.core.graph import MAX_VERTICES, Graph, iter_bits
from wienerkit.errors import CapacityError, GraphError


@dataclass(frozen=True, slots=True)
class Digraph:
    n: int
    out: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.out) != self.n:
            raise GraphError("one out-row per vertex required")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.out):
            if row & ~full:
                raise GraphError(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.out) for v in iter_bits(row)]

    @property
    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def out_degree(self, u: int) -> int:
        return self.out[u].bit_count()

    def in_rows(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, row in enumerate(self.out):
            for v in iter_bits(row):
                rows[v] |= 1 << u
        return tuple(rows)

    def is_oriented(self) -> bool:
        """No pair of opposite arcs."""
        return all(not (self.out[v] >> u & 1) for u, row in enumerate(self.out) for v in iter_bits(row))

    def underlying(self) -> Graph:
        ins = self.in_rows()
        return Graph._raw(self.n, [o | i for o, i in zip(self.out, ins)])

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


def converse(d: Digraph) -> Digraph:
    return Digraph(d.n, d.in_rows())


def _layers(out: Sequence[int], s: int) -> tuple[list[int], int]:
    seen = 1 << s
    frontier = seen
    layers = []
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= out[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        if frontier:
            seen |= frontier
            layers.append(frontier)
    return layers, seen


def reach_mask(d: Digraph, s: int) -> int:
    """Vertices reachable from s, s included."""
    return _layers(d.out, s)[1]


def distance_row(d: Digraph, s: int) -> list[int]:
    row = [0] * d.n
    layers, _ = _layers(d.out, s)
    for k, layer in enumerate(layers, start=1):
        for v in iter_bits(layer):
            row[v] = k
    return row


def out_distance_sum(d: Digraph, u: int) -> int:
    """w(u): sum of directed distances from u (unreachable counts 0)."""
    layers, _ = _layers(d.out, u)
    return sum(k * layer.bit_count() for k, layer in enumerate(layers, start=1))


def digraph_wiener(d: Digraph) -> int:
    return sum(out_distance_sum(d, u) for u in range(d.n))


def wiener_increment(d: Digraph, u: int) -> int:
    return out_distance_sum(d, u) - d.out_degree(u)


def total_increment(d: Digraph) -> int:
    """Σ Δw(u); equals W(D) minus the arc count."""
    return sum(wiener_increment(d, u) for u in range(d.n))


def tau(d: Digraph, self_count: bool = True) -> int:
    """Σ_x σ(x), σ(x) = number of vertices reachable from x.

    With ``self_count`` the trivial path makes x count for itself.
    """
    total = sum(reach_mask(d, s).bit_count() for s in range(d.n))
    return total if self_count else total - d.n


def tau_graph(g: Graph, self_count: bool = True) -> int:
    """τ of an undirected graph, reading each edge as both arcs."""
    return tau(Digraph(g.n, g.adj), self_count)


def is_strongly_connected(d: Digraph) -> bool:
    full = (1 << d.n) - 1
    if reach_mask(d, 0) != full:
        return False
    return _layers(d.in_rows(), 0)[1] == full


def is_acyclic(d: Digraph) -> bool:
    """Kahn-style peeling of sinks."""
    alive = (1 << d.n) - 1
    out = d.out
    changed = True
    while alive and changed:
        changed = False
        for v in iter_bits(alive):
            if not out[v] & alive:
                alive ^= 1 << v
                changed = True
    return alive == 0


def core_vertices(d: Digraph) -> frozenset[int]:
    """Vertices comparable by a directed path with every other vertex.

    The underlying graph must be a tree; an empty result means the
    orientation has a zig-zag.
    """
    if not d.is_oriented() or not d.underlying().is_tree():
        raise GraphError("core vertices are defined for oriented trees")
    full = (1 << d.n) - 1
    fwd = [reach_mask(d, v) for v in range(d.n)]
    back = [0] * d.n
    for u in range(d.n):
        for v in iter_bits(fwd[u]):
            back[v] |= 1 << u
    return frozenset(v for v in range(d.n) if fwd[v] | back[v] == full)


def is_no_zig_zag(d: Digraph) -> bool:
    return bool(core_vertices(d))


def from_graph(g: Graph, directions: Optional[Sequence[int]] = None) -> Digraph:
    """Orient ``g``; direction bit 0 sends edge (u, v), u < v, as u -> v."""
    edges = g.edges()
    if directions is None:
        directions = [0] * len(edges)
    if len(directions) != len(edges):
        raise GraphError("one direction bit per edge required")
    rows = [0] * g.n
    for (u, v), bit in zip(edges, directions):
        if bit:
            rows[v] |= 1 << u
        else:
            rows[u] |= 1 << v
    return Digraph(g.n, tuple(rows))
