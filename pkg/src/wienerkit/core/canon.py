"""Canonical labeling by colour refinement and individualisation.

The search tree is explored depth first. Leaves are compared through the
relabelled adjacency rows packed into one integer; the largest leaf is the
canonical one. Leaves that reproduce the first or the best certificate give
automorphisms, which are used both to prune siblings (orbits of the
subgroup fixing the current prefix) and to report vertex orbits.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from wienerkit.core.graph import Graph, iter_bits
from wienerkit.errors import SizeGuardError

CANON_GUARD = 16


class CanonResult(NamedTuple):
    labeling: tuple[int, ...]  # vertex -> canonical position
    graph: Graph
    orbits: tuple[frozenset[int], ...]
    generators: tuple[tuple[int, ...], ...]


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement; colours come back as compact ranks."""
    ncol = -1
    while True:
        sig = [(colors[v], tuple(sorted([colors[w] for w in nb]))) for v, nb in enumerate(nbrs)]
        uniq = sorted(set(sig))
        if len(uniq) == ncol:
            return colors
        ncol = len(uniq)
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sig]
        if ncol == len(nbrs):
            return colors


def _orbit_roots(n: int, gens) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.nbrs = [list(iter_bits(r)) for r in adj]
        self.first = None  # (cert, pos, prefix)
        self.best = None
        self.gens: list[tuple[int, ...]] = []

    def cert(self, pos):
        n = self.n
        c = 0
        for v, row in enumerate(self.adj):
            r = 0
            for w in self.nbrs[v]:
                r |= 1 << pos[w]
            c |= r << (n * pos[v])
        return c

    def leaf(self, pos, prefix):
        c = self.cert(pos)
        if self.first is None:
            self.first = self.best = (c, pos, prefix)
            return None
        for ref in (self.first, self.best):
            if c == ref[0]:
                # ref labeling followed by the inverse of this one
                inv = [0] * self.n
                for v, p in enumerate(pos):
                    inv[p] = v
                self.gens.append(tuple(inv[p] for p in ref[1]))
                k = 0
                for a, b in zip(ref[2], prefix):
                    if a != b:
                        break
                    k += 1
                return k
        if c > self.best[0]:
            self.best = (c, pos, prefix)
        return None

    def run(self, colors, prefix):
        n = self.n
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            return self.leaf(colors, prefix)
        size = min(len(cell) for cell in cells.values() if len(cell) > 1)
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) == size)
        level = len(prefix)
        explored: list[int] = []
        seen_gens = -1
        roots = None
        for v in target:
            if explored:
                if len(self.gens) != seen_gens:
                    seen_gens = len(self.gens)
                    fixing = [g for g in self.gens if all(g[x] == x for x in prefix)]
                    roots = _orbit_roots(n, fixing) if fixing else None
                if roots is not None and any(roots[u] == roots[v] for u in explored):
                    continue
            child = [2 * c + 1 for c in colors]
            child[v] -= 1
            res = self.run(_refine(self.nbrs, child), prefix + (v,))
            explored.append(v)
            if res is not None and res < level:
                return res
        return None


def _canon(g: Graph) -> CanonResult:
    s = _Search(g.adj, g.n)
    s.run(_refine(s.nbrs, [0] * g.n), ())
    pos = s.best[1]
    roots = _orbit_roots(g.n, s.gens)
    groups: dict[int, set[int]] = {}
    for v, r in enumerate(roots):
        groups.setdefault(r, set()).add(v)
    orbits = tuple(frozenset(groups[r]) for r in sorted(groups))
    return CanonResult(tuple(pos), g.relabel(pos), orbits, tuple(s.gens))


def _guard(g: Graph) -> None:
    if g.n > CANON_GUARD:
        raise SizeGuardError(f"exact canonicalizer guarded at n <= {CANON_GUARD}")


def canonical_labeling(g: Graph) -> CanonResult:
    """Canonical relabelling, canonical graph, orbits and automorphism generators."""
    _guard(g)
    return _canon(g)


def canonical_graph(g: Graph) -> Graph:
    _guard(g)
    return _canon(g).graph


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical graph; equal iff isomorphic."""
    from wienerkit.formats import graph6_encode

    return graph6_encode(canonical_graph(g))


def automorphism_orbits(g: Graph) -> tuple[frozenset[int], ...]:
    _guard(g)
    return _canon(g).orbits


def is_vertex_transitive(g: Graph) -> bool:
    return len(automorphism_orbits(g)) == 1


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph(g).adj == canonical_graph(h).adj
