"""Exact vertex colouring for small graphs."""

from __future__ import annotations

from typing import Iterator

from wienerkit.core.graph import Graph, iter_bits
from wienerkit.errors import SizeGuardError

COLORING_GUARD = 20


def _guard(g: Graph) -> None:
    if g.n > COLORING_GUARD:
        raise SizeGuardError(f"exact colouring guarded at n <= {COLORING_GUARD}")


def chromatic_number(g: Graph) -> int:
    """Branch and bound over colour classes with DSATUR vertex choice."""
    _guard(g)
    n, adj = g.n, g.adj
    if g.m == 0:
        return 1
    color = [-1] * n
    best = [n]

    def pick():
        choice, key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[w] for w in iter_bits(adj[v]) if color[w] >= 0})
            k = (sat, adj[v].bit_count())
            if key is None or k > key:
                choice, key = v, k
        return choice

    def rec(done, used):
        if used >= best[0]:
            return
        if done == n:
            best[0] = used
            return
        v = pick()
        banned = {color[w] for w in iter_bits(adj[v]) if color[w] >= 0}
        for c in range(used):
            if c not in banned:
                color[v] = c
                rec(done + 1, used)
                color[v] = -1
        if used + 1 < best[0]:
            color[v] = used
            rec(done + 1, used + 1)
            color[v] = -1

    rec(0, 0)
    return best[0]


def proper_colorings(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Every proper colouring with colours 1..k, as a tuple indexed by vertex.

    No symmetry reduction: permuting colour names gives distinct outputs.
    """
    _guard(g)
    n, adj = g.n, g.adj
    color = [0] * n

    def rec(v):
        if v == n:
            yield tuple(color)
            return
        banned = {color[w] for w in iter_bits(adj[v] & ((1 << v) - 1))}
        for c in range(1, k + 1):
            if c not in banned:
                color[v] = c
                yield from rec(v + 1)
        color[v] = 0

    if k >= 1:
        yield from rec(0)
