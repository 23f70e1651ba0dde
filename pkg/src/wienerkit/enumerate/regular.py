"""Connected regular graphs.

The main path is vertex addition with a degree-deficit cut (see
``augment.iter_regular``). ``regular_graphs_filtered`` reaches the same class
through the plain degree-capped enumerator and serves as a cross-check at
small orders.
"""

from __future__ import annotations

from typing import Optional

from wienerkit.core.graph import Graph
from wienerkit.enumerate.augment import Shard, iter_connected, iter_regular
from wienerkit.errors import BudgetError, GraphError

REGULAR_LIMITS = {3: 14, 4: 11}
DEFAULT_LIMIT = 10


def regular_graphs(n: int, k: int, shard: Optional[Shard] = None) -> tuple[Graph, ...]:
    """Connected k-regular graphs on n vertices, one per isomorphism class."""
    if k * n % 2:
        raise GraphError("k * n must be even")
    if not 0 <= k < n:
        raise GraphError(f"no {k}-regular graph on {n} vertices")
    limit = REGULAR_LIMITS.get(k, DEFAULT_LIMIT)
    if n > limit:
        raise BudgetError(f"{k}-regular budget is n <= {limit}")
    return tuple(iter_regular(n, k, shard))


def regular_graphs_filtered(n: int, k: int, limit: int = 10) -> tuple[Graph, ...]:
    if n > limit:
        raise BudgetError(f"filtered regular path limited to n <= {limit}")
    return tuple(g for g in iter_connected(n, max_degree=k) if g.min_degree == k)
