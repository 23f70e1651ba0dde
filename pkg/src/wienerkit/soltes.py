"""Vertices whose removal leaves the Wiener index unchanged.

Δ_v(G) = W(G) - W(G - v) is only defined when G - v is connected; cut
vertices get ``None``. They never count as Šoltés vertices but stay in the
denominator of the proportion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from wienerkit.core.distance import wiener, wiener_of_rows
from wienerkit.core.graph import Graph, delete_vertices
from wienerkit.errors import DisconnectedGraphError, GraphError, UndefinedRemovalError


@dataclass(frozen=True)
class SoltesProfile:
    n: int
    wiener: int
    deltas: tuple[Optional[int], ...]  # None where G - v is disconnected

    @property
    def soltes_vertices(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.deltas) if d == 0)

    @property
    def undefined_vertices(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.deltas) if d is None)

    @property
    def proportion(self) -> Fraction:
        return Fraction(len(self.soltes_vertices), self.n)

    @property
    def is_soltes_graph(self) -> bool:
        return all(d == 0 for d in self.deltas)


def _w_without(g: Graph, v: int) -> Optional[int]:
    sub = delete_vertices(g, [v])
    return wiener_of_rows(sub.adj, sub.n)


def soltes_profile(g: Graph) -> SoltesProfile:
    if g.n < 3:
        raise GraphError("Šoltés profile needs at least 3 vertices")
    w = wiener(g)
    deltas = []
    for v in range(g.n):
        rest = _w_without(g, v)
        deltas.append(None if rest is None else w - rest)
    return SoltesProfile(g.n, w, tuple(deltas))


def delta_for_set(g: Graph, removed: Iterable[int]) -> int:
    """W(G) - W(G - S)."""
    removed = sorted(set(removed))
    if not removed:
        wiener(g)  # still insists on a connected G
        return 0
    sub = delete_vertices(g, removed)
    rest = wiener_of_rows(sub.adj, sub.n)
    if rest is None:
        raise UndefinedRemovalError(f"removing {removed} disconnects the graph")
    return wiener(g) - rest


def z_level_vertices(g: Graph, z: int) -> frozenset[int]:
    prof = soltes_profile(g)
    return frozenset(v for v, d in enumerate(prof.deltas) if d is not None and d == z)


class MinDegreeGuard(NamedTuple):
    applies: bool  # δ(G) >= n/2
    holds: bool  # no Šoltés vertex whenever the guard applies


def min_degree_guard_check(g: Graph) -> MinDegreeGuard:
    if not g.is_connected():
        raise DisconnectedGraphError("graph must be connected")
    applies = 2 * g.min_degree >= g.n
    if not applies or g.n < 3:
        return MinDegreeGuard(applies, True)
    return MinDegreeGuard(True, not soltes_profile(g).soltes_vertices)
