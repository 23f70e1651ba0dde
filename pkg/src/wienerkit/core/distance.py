"""Hop distances and the distance-sum invariants built on them."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from wienerkit.core.graph import Graph
from wienerkit.errors import DisconnectedGraphError

# A distance matrix row holds ``None`` for pairs in different components.
DistanceMatrix = tuple[tuple[Optional[int], ...], ...]


def bfs_layers(adj: Sequence[int], source: int) -> tuple[list[int], int]:
    """Distance layers from ``source`` as bitmasks (layer k holds distance k+1).

    Also returns the mask of every vertex reached, source included.
    """
    seen = 1 << source
    frontier = seen
    layers = []
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        if frontier:
            seen |= frontier
            layers.append(frontier)
    return layers, seen


def distance_matrix(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        row: list[Optional[int]] = [None] * g.n
        row[s] = 0
        layers, _ = bfs_layers(g.adj, s)
        for k, layer in enumerate(layers, start=1):
            while layer:
                low = layer & -layer
                row[low.bit_length() - 1] = k
                layer ^= low
        rows.append(tuple(row))
    return tuple(rows)


def _transmission(adj: Sequence[int], s: int, full: int) -> int:
    layers, seen = bfs_layers(adj, s)
    if seen != full:
        raise DisconnectedGraphError("wiener undefined on disconnected graph")
    return sum(k * layer.bit_count() for k, layer in enumerate(layers, start=1))


def transmissions(g: Graph) -> list[int]:
    """Per-vertex distance sums ``t(u)``; their total is twice the Wiener index."""
    full = (1 << g.n) - 1
    return [_transmission(g.adj, s, full) for s in range(g.n)]


def wiener(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs of a connected graph."""
    return sum(transmissions(g)) // 2


def wiener_of_rows(adj: Sequence[int], n: int) -> Optional[int]:
    """Wiener index straight from bit-rows, or None when disconnected (hot loops)."""
    full = (1 << n) - 1
    total = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        k = 0
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            k += 1
            total += k * frontier.bit_count()
            seen |= frontier
        if seen != full:
            return None
    return total // 2


def wiener_dimension(g: Graph) -> int:
    return len(set(transmissions(g)))


def distance_counts(g: Graph) -> dict[int, int]:
    """Number of unordered pairs at each distance; connected graphs only."""
    full = (1 << g.n) - 1
    counts: dict[int, int] = {}
    for s in range(g.n):
        layers, seen = bfs_layers(g.adj, s)
        if seen != full:
            raise DisconnectedGraphError("distances undefined on disconnected graph")
        for k, layer in enumerate(layers, start=1):
            counts[k] = counts.get(k, 0) + layer.bit_count()
    return {d: c // 2 for d, c in sorted(counts.items())}


class EccentricityProfile(NamedTuple):
    eccentricities: tuple[int, ...]
    diameter: int
    radius: int


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    full = (1 << g.n) - 1
    ecc = []
    for s in range(g.n):
        layers, seen = bfs_layers(g.adj, s)
        if seen != full:
            raise DisconnectedGraphError("eccentricity undefined on disconnected graph")
        ecc.append(len(layers))
    return EccentricityProfile(tuple(ecc), max(ecc), min(ecc))


def diameter(g: Graph) -> int:
    return eccentricity_profile(g).diameter


def radius(g: Graph) -> int:
    return eccentricity_profile(g).radius


def degree_upper_bound(g: Graph) -> Fraction:
    """C(n-Δ+δ, 2)·(n+2Δ)/(δ+1) + 2n(n-1), an upper bound on W(G) for connected G."""
    n, hi, lo = g.n, g.max_degree, g.min_degree
    k = n - hi + lo
    return Fraction(k * (k - 1) // 2 * (n + 2 * hi), lo + 1) + 2 * n * (n - 1)
