"""Class filters over the generators and an extremal-record harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional

from wienerkit.core.canon import canonical_form
from wienerkit.core.distance import eccentricity_profile
from wienerkit.core.graph import Graph
from wienerkit.core.structure import blocks, circumference, is_biconnected
from wienerkit.enumerate.augment import Shard, iter_connected, iter_regular, iter_trees
from wienerkit.errors import BudgetError, GraphError

BLOCKS_LIMIT = 9


@dataclass(frozen=True)
class ClassFilter:
    """Which connected graphs a run keeps.

    ``max_degree`` is applied during generation; ``exact_max_degree``,
    ``connectivity`` (1 or 2), ``diameter``, ``radius``, ``blocks`` and
    ``max_circumference`` are checked on each finished graph.
    """

    max_degree: Optional[int] = None
    exact_max_degree: Optional[int] = None
    regular: Optional[int] = None
    connectivity: int = 1
    diameter: Optional[int] = None
    radius: Optional[int] = None
    blocks: Optional[int] = None
    tree: bool = False
    max_circumference: Optional[int] = None

    def __post_init__(self):
        if self.regular is not None and self.max_degree is not None and self.max_degree < self.regular:
            raise GraphError("regular degree exceeds the max-degree cap")
        if (self.exact_max_degree is not None and self.max_degree is not None
                and self.exact_max_degree > self.max_degree):
            raise GraphError("exact max degree exceeds the max-degree cap")
        if self.connectivity not in (1, 2):
            raise GraphError("connectivity level must be 1 or 2")
        if self.tree and (self.connectivity == 2 or self.regular not in (None, 1)):
            raise GraphError("tree flag conflicts with the other constraints")

    def degree_cap(self) -> Optional[int]:
        caps = [c for c in (self.max_degree, self.exact_max_degree, self.regular) if c is not None]
        return min(caps) if caps else None

    def accepts(self, g: Graph) -> bool:
        if self.exact_max_degree is not None and g.max_degree != self.exact_max_degree:
            return False
        if self.regular is not None and g.min_degree != self.regular:
            return False
        if self.tree and not g.is_tree():
            return False
        if self.connectivity == 2 and not is_biconnected(g):
            return False
        if self.blocks is not None and blocks(g).count != self.blocks:
            return False
        if self.diameter is not None or self.radius is not None:
            prof = eccentricity_profile(g)
            if self.diameter is not None and prof.diameter != self.diameter:
                return False
            if self.radius is not None and prof.radius != self.radius:
                return False
        if self.max_circumference is not None:
            if circumference(g, stop_at=self.max_circumference + 1) > self.max_circumference:
                return False
        return True

    def stream(self, n: int, shard: Optional[Shard] = None) -> Iterator[Graph]:
        if self.tree:
            base = iter_trees(n, self.degree_cap(), shard)
        elif self.regular is not None:
            base = iter_regular(n, self.regular, shard)
        else:
            base = iter_connected(n, self.degree_cap(), shard)
        return (g for g in base if self.accepts(g))


CHEMICAL = ClassFilter(max_degree=4)


def connected_graphs(n: int, filt: Optional[ClassFilter] = None,
                     visitor: Optional[Callable[[Graph], Any]] = None,
                     shard: Optional[Shard] = None) -> int:
    """Feed every connected graph of the class to ``visitor``; returns the count."""
    count = 0
    for g in (filt or ClassFilter()).stream(n, shard):
        if visitor is not None:
            visitor(g)
        count += 1
    return count


def trees(n: int, visitor: Optional[Callable[[Graph], Any]] = None, shard: Optional[Shard] = None) -> int:
    return connected_graphs(n, ClassFilter(tree=True), visitor, shard)


def blocks_class(n: int, p: int, visitor: Optional[Callable[[Graph], Any]] = None,
                 shard: Optional[Shard] = None) -> int:
    """Connected graphs with exactly p blocks (n <= 9)."""
    if n > BLOCKS_LIMIT:
        raise BudgetError(f"block-count enumeration budget is n <= {BLOCKS_LIMIT}")
    if p == n - 1:
        filt = ClassFilter(tree=True)
    elif p == 1 and n >= 3:
        filt = ClassFilter(connectivity=2)
    else:
        filt = ClassFilter(blocks=p)
    return connected_graphs(n, filt, visitor, shard)


@dataclass
class SearchRecord:
    objective: str
    direction: str
    best: Any = None
    graphs: list[str] = field(default_factory=list)  # canonical graph6, sorted
    visited: int = 0

    def __post_init__(self):
        if self.direction not in ("min", "max"):
            raise GraphError("direction must be 'min' or 'max'")

    def _better(self, value) -> bool:
        return value < self.best if self.direction == "min" else value > self.best

    def offer(self, g: Graph, value) -> None:
        self.visited += 1
        if self.best is None or self._better(value):
            self.best = value
            self.graphs = [canonical_form(g)]
        elif value == self.best:
            self.graphs.append(canonical_form(g))
            # keep sorted and unique as we go
            self.graphs = sorted(set(self.graphs))

    def merge(self, other: "SearchRecord") -> "SearchRecord":
        """Combine shard results; associative and commutative."""
        if (self.objective, self.direction) != (other.objective, other.direction):
            raise GraphError("cannot merge records of different searches")
        out = SearchRecord(self.objective, self.direction, visited=self.visited + other.visited)
        cands = [r for r in (self, other) if r.best is not None]
        if cands:
            pick = min if self.direction == "min" else max
            out.best = pick(r.best for r in cands)
            out.graphs = sorted({s for r in cands if r.best == out.best for s in r.graphs})
        return out

    @property
    def count(self) -> int:
        return len(self.graphs)


def extremal_search(stream: Iterable[Graph], objective: Callable[[Graph], Any], direction: str,
                    name: Optional[str] = None) -> SearchRecord:
    rec = SearchRecord(name or getattr(objective, "__name__", "objective"), direction)
    for g in stream:
        rec.offer(g, objective(g))
    if rec.best is None:
        raise GraphError("extremal search over an empty stream")
    return rec
