"""Szeged index, variable Wiener/Szeged indices and roots of h = Sz^α - W^α."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Union

from wienerkit.core.distance import distance_matrix
from wienerkit.core.graph import Graph
from wienerkit.core.structure import blocks
from wienerkit.errors import DisconnectedGraphError, GraphError

Number = Union[int, float]


class DegenerateGraphError(GraphError):
    """h vanishes identically (complete graphs)."""


def _connected_distances(g: Graph):
    if not g.is_connected():
        raise DisconnectedGraphError("index undefined on disconnected graph")
    return distance_matrix(g)


def edge_split_counts(g: Graph) -> list[tuple[tuple[int, int], int, int]]:
    """Per edge uv (lexicographic): (uv, n_v(u), n_u(v)), counting vertices
    strictly closer to u, respectively to v."""
    dist = _connected_distances(g)
    out = []
    for u, v in g.edges():
        du, dv = dist[u], dist[v]
        nu = sum(1 for w in range(g.n) if du[w] < dv[w])
        nv = sum(1 for w in range(g.n) if dv[w] < du[w])
        out.append(((u, v), nu, nv))
    return out


def _products(g: Graph) -> list[int]:
    return [a * b for _, a, b in edge_split_counts(g)]


def _pair_distances(g: Graph) -> list[int]:
    dist = _connected_distances(g)
    return [dist[u][v] for u in range(g.n) for v in range(u + 1, g.n)]


def _power_sum(values: list[int], alpha: Number) -> Number:
    if isinstance(alpha, int) and alpha >= 0:
        return sum(x ** alpha for x in values)
    return math.fsum(float(x) ** alpha for x in values)


def szeged(g: Graph) -> int:
    return sum(_products(g))


def variable_szeged(g: Graph, alpha: Number) -> Number:
    """Sz^α; exact integer for non-negative integer α."""
    return _power_sum(_products(g), alpha)


def variable_wiener(g: Graph, alpha: Number) -> Number:
    """W^α; exact integer for non-negative integer α."""
    return _power_sum(_pair_distances(g), alpha)


class IndexTerms(NamedTuple):
    """Multisets {value: multiplicity} of the Szeged products and pair distances."""

    products: dict[int, int]
    distances: dict[int, int]


def index_terms(g: Graph) -> IndexTerms:
    return IndexTerms(dict(Counter(_products(g))), dict(Counter(_pair_distances(g))))


def cambie_haslegrave_terms(k: int, ell: int) -> IndexTerms:
    """Closed-form terms of G_{k,ℓ}, usable far beyond the bitmask graph capacity.

    Clique edges at cycle distance 2 split 2|2, the others 3|3; a hub edge
    splits 1|(ℓ+3); the i-th tail edge splits (k+i)|(ℓ-i+1). Clique pairs are
    at distance 1 or 2 (k of them), clique-to-tail pairs at distance i+1.
    """
    if k < 5 or ell < 1:
        raise GraphError("need k >= 5 and ell >= 1")
    pairs = k * (k - 1) // 2
    prod: Counter = Counter({4: k, 9: pairs - 2 * k})
    prod[ell + 3] += k
    for i in range(1, ell + 1):
        prod[(k + i) * (ell - i + 1)] += 1
    dist: Counter = Counter({1: pairs - k, 2: k})
    for i in range(ell + 1):
        dist[i + 1] += k  # clique to x_i
    for i in range(1, ell + 1):
        dist[i] += 1  # hub to x_i
    for d in range(1, ell):
        dist[d] += ell - d  # inside the tail
    return IndexTerms(dict(+prod), dict(+dist))


def h_value(terms: IndexTerms, alpha: float) -> float:
    """Sz^α - W^α from precomputed terms, one compensated sum."""
    a = float(alpha)
    return math.fsum([c * float(p) ** a for p, c in terms.products.items()]
                     + [-c * float(d) ** a for d, c in terms.distances.items()])


@dataclass
class RootScan:
    lo: float
    hi: float
    steps: int
    tol: float
    brackets: list[tuple[float, float]]

    @property
    def count(self) -> int:
        """Number of sign changes found (at least this many roots)."""
        return len(self.brackets)

    def roots(self) -> list[float]:
        return [(a + b) / 2 for a, b in self.brackets]


def critical_exponents(g: Graph, lo: float = 0.0, hi: float = 4.0, steps: int = 4096,
                       tol: float = 1e-9) -> RootScan:
    """Sign changes of h on a uniform grid, each narrowed by bisection to width <= tol.

    Exact zeros on the grid are skipped when comparing signs; a sign change
    across such a zero is reported as the degenerate bracket (z, z).
    """
    if g.is_complete():
        raise DegenerateGraphError("h is identically zero on a complete graph")
    return scan_terms(index_terms(g), lo, hi, steps, tol)


def scan_terms(terms: IndexTerms, lo: float = 0.0, hi: float = 4.0, steps: int = 4096,
               tol: float = 1e-9) -> RootScan:
    """``critical_exponents`` on precomputed terms."""
    if steps < 1 or not hi > lo or not tol > 0:
        raise GraphError("need steps >= 1, hi > lo and tol > 0")
    if Counter(terms.products) == Counter(terms.distances):
        raise DegenerateGraphError("h is identically zero")
    xs = [lo + (hi - lo) * i / steps for i in range(steps + 1)]
    brackets = []
    last_x = last_v = None
    zero_at = None
    for x in xs:
        v = h_value(terms, x)
        if v == 0:
            if zero_at is None:
                zero_at = x
            continue
        if last_v is not None and (v > 0) != (last_v > 0):
            if zero_at is not None:
                brackets.append((zero_at, zero_at))
            else:
                a, b, fa = last_x, x, last_v
                while b - a > tol:
                    mid = (a + b) / 2
                    fm = h_value(terms, mid)
                    if fm == 0:
                        a = b = mid
                        break
                    if (fm > 0) == (fa > 0):
                        a, fa = mid, fm
                    else:
                        b = mid
                brackets.append((a, b))
        last_x, last_v = x, v
        zero_at = None
    return RootScan(lo, hi, steps, tol, brackets)


class EqualityCheck(NamedTuple):
    equal: bool  # Sz(G) == W(G)
    block_complete: bool  # every block is a complete graph

    @property
    def agree(self) -> bool:
        return self.equal == self.block_complete


def classify_equality(g: Graph) -> EqualityCheck:
    return EqualityCheck(szeged(g) == variable_wiener(g, 1), blocks(g).all_complete)
