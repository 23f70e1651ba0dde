"""Block decomposition and graph operations (line graph, box product)."""

from __future__ import annotations

from dataclasses import dataclass

from wienerkit.core.graph import MAX_VERTICES, Graph, iter_bits
from wienerkit.errors import CapacityError, GraphError, SizeGuardError


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_edge_counts: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def all_complete(self) -> bool:
        return all(m == len(b) * (len(b) - 1) // 2 for b, m in zip(self.blocks, self.block_edge_counts))

    @property
    def is_cactus(self) -> bool:
        # every block is a single edge or a cycle
        return all(len(b) <= 2 or m == len(b) for b, m in zip(self.blocks, self.block_edge_counts))


def blocks(g: Graph) -> BlockDecomposition:
    """Maximal non-separable subgraphs and cut-vertices (Hopcroft-Tarjan).

    An isolated vertex forms a block of its own.
    """
    n, adj = g.n, g.adj
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if adj[root] == 0:
            disc[root] = timer
            timer += 1
            found.append(frozenset([root]))
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        root_children = 0
        # frames: (vertex, parent, remaining neighbour mask)
        stack = [(root, -1, adj[root])]
        while stack:
            v, parent, rest = stack[-1]
            if rest:
                low_bit = rest & -rest
                w = low_bit.bit_length() - 1
                stack[-1] = (v, parent, rest ^ low_bit)
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, adj[w]))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    counts = []
    for b in found:
        mask = 0
        for v in b:
            mask |= 1 << v
        counts.append(sum((adj[v] & mask).bit_count() for v in b) // 2)
    return BlockDecomposition(tuple(found), frozenset(cuts), tuple(counts))


def cut_vertices(g: Graph) -> frozenset[int]:
    return blocks(g).cut_vertices


def is_biconnected(g: Graph) -> bool:
    """2-connected in the usual sense: connected, at least 3 vertices, no cut-vertex."""
    return g.n >= 3 and g.is_connected() and not blocks(g).cut_vertices


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    if len(edges) > MAX_VERTICES:
        raise CapacityError(f"line graph would have {len(edges)} vertices (cap {MAX_VERTICES})")
    incident = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return Graph._raw(len(edges), rows)


def iterated_line_graph(g: Graph, k: int) -> Graph:
    if k < 0:
        raise GraphError("iteration count must be non-negative")
    for _ in range(k):
        g = line_graph(g)
    return g


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product; vertex ``(a, b)`` gets index ``a * h.n + b``."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"product has {n} vertices (cap {MAX_VERTICES})")
    rows = [0] * n
    for a in range(g.n):
        for b in range(h.n):
            r = 0
            for b2 in iter_bits(h.adj[b]):
                r |= 1 << (a * h.n + b2)
            for a2 in iter_bits(g.adj[a]):
                r |= 1 << (a2 * h.n + b)
            rows[a * h.n + b] = r
    return Graph._raw(n, rows)


CIRCUMFERENCE_GUARD = 12


def circumference(g: Graph, *, stop_at: int | None = None) -> int:
    """Length of a longest cycle (0 for forests); exact DFS, guarded at n <= 12.

    With ``stop_at`` the search returns as soon as a cycle of at least that
    length is seen.
    """
    if g.n > CIRCUMFERENCE_GUARD:
        raise SizeGuardError(f"circumference search guarded at n <= {CIRCUMFERENCE_GUARD}")
    adj = g.adj
    target = g.n if stop_at is None else min(stop_at, g.n)
    best = 0
    for s in range(g.n):
        # cycles whose smallest vertex is s
        higher = ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, 1, adj[s] & higher)]
        while stack:
            v, used, length, rest = stack.pop()
            if rest:
                low_bit = rest & -rest
                w = low_bit.bit_length() - 1
                stack.append((v, used, length, rest ^ low_bit))
                stack.append((w, used | low_bit, length + 1, adj[w] & higher & ~used))
                if length >= 2 and adj[w] >> s & 1 and length + 1 > best:
                    best = length + 1
                    if best >= target:
                        return best
    return best
