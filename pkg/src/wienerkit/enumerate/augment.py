"""Isomorph-free generation of connected graphs and trees by vertex addition.

A graph G on n vertices is accepted from parent P = G - v only if v lies in
the automorphism orbit of a canonically chosen deletable vertex of G
(a non-cut vertex for connected graphs, a leaf for trees). Parents come one
per isomorphism class, and new neighbourhoods are taken one per orbit of
Aut(P) on vertex subsets, so each class is produced exactly once without a
global store.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Optional

from wienerkit.core.canon import canonical_labeling
from wienerkit.core.graph import Graph, iter_bits
from wienerkit.errors import BudgetError, GraphError

UNFILTERED_LIMIT = 10
FILTERED_LIMIT = 14
TREE_LIMIT = 16


@dataclass(frozen=True)
class Shard:
    index: int
    total: int

    def __post_init__(self):
        if self.total < 1 or not 0 <= self.index < self.total:
            raise GraphError(f"bad shard {self.index}/{self.total}")

    @classmethod
    def parse(cls, text: str) -> "Shard":
        i, _, t = text.partition("/")
        return cls(int(i), int(t))


def _invariant(adj, u, degs):
    row = adj[u]
    nsum = 0
    inner = 0
    for w in iter_bits(row):
        nsum += degs[w]
        inner += (adj[w] & row).bit_count()
    return (degs[u], nsum, inner)


def _is_cut(adj, full, u):
    rest = full ^ (1 << u)
    start = (rest & -rest)
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & rest & ~seen
        seen |= frontier
    return seen != rest


def _accept(adj, n, v, leaves_only):
    """Is the last vertex ``v`` the canonical deletion of the graph ``adj``?"""
    full = (1 << n) - 1
    degs = [r.bit_count() for r in adj]
    dv = degs[v]
    # cheap stage: any eligible vertex with a larger degree beats v
    if leaves_only:
        eligible_higher = False
    else:
        eligible_higher = any(degs[u] > dv and not _is_cut(adj, full, u) for u in range(n - 1))
    if eligible_higher:
        return False, None
    fv = _invariant(adj, v, degs)
    ties = [v]
    for u in range(n - 1):
        if degs[u] != dv:
            continue
        if leaves_only or not _is_cut(adj, full, u):
            fu = _invariant(adj, u, degs)
            if fu > fv:
                return False, None
            if fu == fv:
                ties.append(u)
    if len(ties) == 1:
        return True, None
    res = canonical_labeling(Graph._raw(n, adj))
    lab = res.labeling
    chosen = max(ties, key=lambda u: lab[u])
    orbit = next(o for o in res.orbits if chosen in o)
    return v in orbit, res


def _subset_orbits(n: int, gens, candidates: list[int]) -> Iterator[int]:
    """One representative mask per orbit of the group on the given masks."""
    if not gens:
        yield from candidates
        return
    images = []
    for g in gens:
        images.append(g)
    seen = set()
    for mask in candidates:
        if mask in seen:
            continue
        seen.add(mask)
        stack = [mask]
        while stack:
            m = stack.pop()
            for g in images:
                im = 0
                for x in iter_bits(m):
                    im |= 1 << g[x]
                if im not in seen:
                    seen.add(im)
                    stack.append(im)
        yield mask


class _Node:
    __slots__ = ("adj", "gens")

    def __init__(self, adj, gens):
        self.adj = adj
        self.gens = gens


def _children(node: _Node, n: int, max_degree: Optional[int], leaves_only: bool) -> Iterator[_Node]:
    """Accepted children on n vertices of a parent on n - 1 vertices."""
    p = n - 1
    padj = node.adj
    if node.gens is None:
        node.gens = canonical_labeling(Graph._raw(p, padj)).generators if p > 1 else ()
    open_vs = [u for u in range(p) if max_degree is None or padj[u].bit_count() < max_degree]
    if leaves_only:
        candidates = [1 << u for u in open_vs]
    else:
        cap = len(open_vs) if max_degree is None else min(max_degree, len(open_vs))
        candidates = []
        for k in range(1, cap + 1):
            for combo in combinations(open_vs, k):
                m = 0
                for u in combo:
                    m |= 1 << u
                candidates.append(m)
    vbit = 1 << p
    for mask in _subset_orbits(p, node.gens, candidates):
        adj = [r | vbit if mask >> i & 1 else r for i, r in enumerate(padj)]
        adj.append(mask)
        ok, res = _accept(adj, n, p, leaves_only)
        if ok:
            yield _Node(adj, res.generators if res is not None else None)


def _generate(n, max_degree, leaves_only, shard: Optional[Shard], shard_level: Optional[int],
              prune: Optional[Callable[[list, int], bool]] = None) -> Iterator[Graph]:
    if n < 1:
        raise GraphError("order must be positive")
    if shard is not None and shard_level is None:
        shard_level = max(1, n - 2)
    counter = [0]

    def walk(node, order):
        if order == n:
            yield Graph._raw(n, node.adj)
            return
        for child in _children(node, order + 1, max_degree, leaves_only):
            if prune is not None and prune(child.adj, order + 1):
                continue
            if shard is not None and order + 1 == shard_level:
                k = counter[0]
                counter[0] += 1
                if k % shard.total != shard.index:
                    continue
            yield from walk(child, order + 1)

    root = _Node([0], ())
    if shard is not None and shard_level == 1:
        if shard.index != 0:
            return
    yield from walk(root, 1)


def iter_connected(n: int, max_degree: Optional[int] = None, shard: Optional[Shard] = None,
                   shard_level: Optional[int] = None) -> Iterator[Graph]:
    """Connected graphs on n vertices, one per isomorphism class.

    ``max_degree`` is enforced while building (it is hereditary under
    deleting a non-cut vertex). Budget: n <= 10 unfiltered, n <= 14 with a
    degree cap of at most 4.
    """
    limit = UNFILTERED_LIMIT if max_degree is None or max_degree > 4 else FILTERED_LIMIT
    if n > limit:
        raise BudgetError(f"connected enumeration budget is n <= {limit} for this filter")
    return _generate(n, max_degree, False, shard, shard_level)


def iter_trees(n: int, max_degree: Optional[int] = None, shard: Optional[Shard] = None) -> Iterator[Graph]:
    if n > TREE_LIMIT:
        raise BudgetError(f"tree enumeration budget is n <= {TREE_LIMIT}")
    return _generate(n, max_degree, True, shard, None)


def iter_regular(n: int, k: int, shard: Optional[Shard] = None) -> Iterator[Graph]:
    """Connected k-regular graphs through vertex addition.

    A partial graph on j vertices is dropped once its total degree deficit
    exceeds k(n - j): each later vertex can lower the deficit by at most k.
    """
    if k * n % 2 or not 0 <= k < n:
        raise GraphError(f"no {k}-regular graph on {n} vertices")

    def prune(adj, order):
        deficit = sum(k - r.bit_count() for r in adj)
        return deficit > k * (n - order)

    return _generate(n, k, False, shard, None, prune)


def visit_all(stream, visitor: Optional[Callable[[Graph], object]] = None) -> int:
    count = 0
    for g in stream:
        if visitor is not None:
            visitor(g)
        count += 1
    return count
