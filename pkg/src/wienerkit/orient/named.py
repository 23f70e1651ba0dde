"""Specific orientations: directed cycles, Θ-graph maximisers, ladder and grid
orientations, Dankelmann's zig-zag tree and the small drawn examples."""

from __future__ import annotations

from itertools import product

from wienerkit.core.graph import Graph
from wienerkit.errors import GraphError
from wienerkit.families import theta, theta_paths
from wienerkit.orient.digraph import Digraph, digraph_wiener


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise GraphError("directed cycle needs n >= 2")
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def theta_cycle_orientations(a: int, b: int, c: int):
    """Orientations of Θ_{a,b,c} where the (a+1)- and (b+1)-paths form a
    directed cycle; the c-path is oriented every possible way."""
    u1, u2, (pa, pb, pc) = theta_paths(a, b, c)
    n = a + b + c + 2
    cyc = [u1] + pa + [u2] + pb[::-1] + [u1]
    cpath = [u1] + pc + [u2]
    for flip in (False, True):
        ring = cyc[::-1] if flip else cyc
        base = list(zip(ring, ring[1:]))
        for bits in product((0, 1), repeat=len(cpath) - 1):
            arcs = list(base)
            for (x, y), bit in zip(zip(cpath, cpath[1:]), bits):
                arcs.append((y, x) if bit else (x, y))
            yield Digraph.from_arcs(n, arcs)


def theta_max(a: int, b: int, c: int) -> Digraph:
    """Best orientation among those whose two longer paths form a directed
    cycle (first one found in a fixed search order)."""
    return max(theta_cycle_orientations(a, b, c), key=digraph_wiener)


def theta_321_drawn() -> Digraph:
    """The non-strongly-connected orientation of Θ_{3,2,1} used as an example:
    u1 -> a1 -> a2 -> a3 -> u2 -> b2 -> b1 -> u1 and z1 -> u1, z1 -> u2."""
    u1, u2, (pa, pb, pc) = theta_paths(3, 2, 1)
    a1, a2, a3 = pa
    b1, b2 = pb
    (z1,) = pc
    arcs = [(u1, a1), (a1, a2), (a2, a3), (a3, u2), (u2, b2), (b2, b1), (b1, u1), (z1, u1), (z1, u2)]
    d = Digraph.from_arcs(8, arcs)
    assert d.underlying() == theta(3, 2, 1)
    return d


def grid_index(m: int, n: int, r: int, c: int) -> int:
    """Vertex (row r, column c), 1-based, row 1 on top."""
    return (r - 1) * n + (c - 1)


def grid_graph(m: int, n: int) -> Graph:
    edges = []
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            if c < n:
                edges.append((grid_index(m, n, r, c), grid_index(m, n, r, c + 1)))
            if r < m:
                edges.append((grid_index(m, n, r, c), grid_index(m, n, r + 1, c)))
    return Graph.from_edges(m * n, edges)


def grid_D(m: int, n: int) -> Digraph:
    """Columns point up except the last (down); rows point left except the top (right)."""
    if m < 2 or n < 2:
        raise GraphError("grid needs m, n >= 2")
    idx = lambda r, c: grid_index(m, n, r, c)
    arcs = []
    for c in range(1, n + 1):
        for r in range(1, m):
            arcs.append((idx(r, c), idx(r + 1, c)) if c == n else (idx(r + 1, c), idx(r, c)))
    for r in range(1, m + 1):
        for c in range(1, n):
            arcs.append((idx(r, c), idx(r, c + 1)) if r == 1 else (idx(r, c + 1), idx(r, c)))
    return Digraph.from_arcs(m * n, arcs)


def ladder_max(n: int) -> Digraph:
    """The two-row case of ``grid_D``: a Hamiltonian directed cycle around the
    ladder with the inner rungs pointing up."""
    return grid_D(2, n)


def grid_C_cycle(m: int, n: int) -> list[int]:
    """The snake Hamiltonian cycle of C_{m,n} as a vertex sequence from (1, 1)."""
    if n < 4 or n % 2:
        raise GraphError("grid_C needs an even n >= 4")
    if m < 2:
        raise GraphError("grid_C needs m >= 2")
    idx = lambda r, c: grid_index(m, n, r, c)
    seq = [idx(1, c) for c in range(1, n + 1)]
    seq += [idx(r, n) for r in range(2, m + 1)]
    for k in range(1, n):
        c = n - k
        rows = range(m, 1, -1) if k % 2 else range(2, m + 1)
        seq += [idx(r, c) for r in rows]
    return seq


def grid_C(m: int, n: int) -> Digraph:
    """Top row to the right, closed into a zig-zag Hamiltonian cycle; every
    other edge points from the later cycle position to the earlier one."""
    seq = grid_C_cycle(m, n)
    pos = {v: i for i, v in enumerate(seq)}
    cyc = set()
    arcs = []
    for a, b in zip(seq, seq[1:] + seq[:1]):
        arcs.append((a, b))
        cyc.add(frozenset((a, b)))
    for u, v in grid_graph(m, n).edges():
        if frozenset((u, v)) in cyc:
            continue
        arcs.append((u, v) if pos[u] > pos[v] else (v, u))
    return Digraph.from_arcs(m * n, arcs)


def dankelmann(k: int) -> Digraph:
    """D_k on the tree T_k.

    Path w1..wk oriented towards wk, k^2/9 leaves u_i -> w1, w2 -> x1 and the
    path x1..x5 towards x5, y1 -> w3. Vertex order: w, u, x, y.
    """
    if k < 3 or k % 3:
        raise GraphError("dankelmann(k) needs k a positive multiple of 3")
    w = list(range(k))
    u = list(range(k, k + k * k // 9))
    x = list(range(u[-1] + 1, u[-1] + 6))
    y1 = x[-1] + 1
    arcs = list(zip(w, w[1:]))
    arcs += [(ui, w[0]) for ui in u]
    arcs.append((w[1], x[0]))
    arcs += list(zip(x, x[1:]))
    arcs.append((y1, w[2]))
    return Digraph.from_arcs(y1 + 1, arcs)


def core_example_left() -> Digraph:
    """Oriented tree with two core vertices: a->c, b->c, c->d, d->e, d->f."""
    a, b, c, d, e, f = range(6)
    return Digraph.from_arcs(6, [(a, c), (b, c), (c, d), (d, e), (d, f)])


def core_example_right() -> Digraph:
    """Oriented tree with no core vertex: a->c, b->c, d->c, d->e, d->f."""
    a, b, c, d, e, f = range(6)
    return Digraph.from_arcs(6, [(a, c), (b, c), (d, c), (d, e), (d, f)])
