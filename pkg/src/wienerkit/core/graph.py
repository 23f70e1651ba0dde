"""Undirected simple graphs stored as one bit-row per vertex.

Row ``adj[i]`` has bit ``j`` set iff ``ij`` is an edge. Vertices are
``0..n-1`` and ``n`` is capped at 64 so every neighbourhood fits in a
machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from wienerkit.errors import CapacityError, GraphError

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def _raw(cls, n: int, adj: Sequence[int]) -> "Graph":
        # Trusted fast path for internal constructors; skips validation.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._raw(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # basic queries

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    @property
    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    def is_connected(self) -> bool:
        return component_mask(self.adj, 0) == (1 << self.n) - 1

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            r = 0
            for v in iter_bits(row):
                r |= 1 << perm[v]
            rows[perm[u]] = r
        return Graph._raw(self.n, rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._raw(self.n, [(full ^ row) & ~(1 << i) for i, row in enumerate(self.adj)])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._raw(self.n, rows)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._raw(self.n, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def component_mask(adj: Sequence[int], start: int, allowed: int = -1) -> int:
    """Bitmask of the component of ``start`` inside the vertex set ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    """True if the subgraph induced by ``mask`` is connected (empty counts as connected)."""
    if not mask:
        return True
    start = (mask & -mask).bit_length() - 1
    return component_mask(adj, start, mask) == mask


def delete_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    """Induced subgraph on the remaining vertices, relabelled preserving order."""
    removed_mask = 0
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        removed_mask |= 1 << v
    keep = [v for v in range(g.n) if not removed_mask >> v & 1]
    if not keep:
        raise GraphError("cannot delete every vertex")
    new_index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in iter_bits(g.adj[v] & ~removed_mask):
            r |= 1 << new_index[w]
        rows.append(r)
    return Graph._raw(len(keep), rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    keep = set(vertices)
    return delete_vertices(g, [v for v in range(g.n) if v not in keep])
