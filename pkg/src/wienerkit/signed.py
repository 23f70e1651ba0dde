"""Signed graphs: signed distance, signed Wiener index, minimisation over
signatures and k-canceling checks.

The signed distance between u and v is the smallest |sum of signs| over the
simple u-v paths. On trees the path is unique. Elsewhere the simple paths are
enumerated depth first by a compiled kernel (guarded at n <= 14); the kernel
stops early once every target has reached distance 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

import numba
import numpy as np

from wienerkit.core.distance import bfs_layers
from wienerkit.core.graph import Graph, component_mask, delete_vertices
from wienerkit.enumerate.augment import Shard
from wienerkit.errors import BudgetError, DisconnectedGraphError, GraphError, SizeGuardError

PATH_GUARD = 14
SIGNATURE_BUDGET = 22


@dataclass(frozen=True)
class SignedGraph:
    base: Graph
    signs: tuple[int, ...]  # one per edge of base.edges(), in that order

    def __post_init__(self):
        if len(self.signs) != self.base.m:
            raise GraphError("one sign per edge required")
        if any(s not in (1, -1) for s in self.signs):
            raise GraphError("signs must be +1 or -1")

    @property
    def edges(self) -> list[tuple[int, int]]:
        return self.base.edges()

    @classmethod
    def constant(cls, g: Graph, sign: int = 1) -> "SignedGraph":
        return cls(g, (sign,) * g.m)

    @classmethod
    def from_code(cls, g: Graph, code: int) -> "SignedGraph":
        """Edge i gets -1 iff bit m-1-i of ``code`` is set."""
        m = g.m
        return cls(g, tuple(-1 if (code >> (m - 1 - i)) & 1 else 1 for i in range(m)))

    def code(self) -> int:
        c = 0
        for s in self.signs:
            c = c << 1 | (s < 0)
        return c

    def negate(self) -> "SignedGraph":
        return SignedGraph(self.base, tuple(-s for s in self.signs))

    def sign_matrix(self) -> np.ndarray:
        n = self.base.n
        mat = np.zeros((n, n), dtype=np.int64)
        for (u, v), s in zip(self.edges, self.signs):
            mat[u, v] = mat[v, u] = s
        return mat

    def delete_vertices(self, removed: Sequence[int]) -> "SignedGraph":
        removed_set = set(removed)
        keep = [v for v in range(self.base.n) if v not in removed_set]
        index = {v: i for i, v in enumerate(keep)}
        sub = delete_vertices(self.base, removed_set)
        by_edge = {(index[u], index[v]): s for (u, v), s in zip(self.edges, self.signs)
                   if u in index and v in index}
        return SignedGraph(sub, tuple(by_edge[e] for e in sub.edges()))


def alternating_path(n: int) -> SignedGraph:
    """P_n with signs +1, -1, +1, ... from one end."""
    from wienerkit.families import path

    return SignedGraph(path(n), tuple(1 if i % 2 == 0 else -1 for i in range(n - 1)))


@numba.njit(cache=True)
def _paths_from(n, adj, sgn, s, best):
    """Fill best[v] = min |signed sum| over simple s-v paths (large if none)."""
    big = 1 << 20
    for v in range(n):
        best[v] = big
    best[s] = 0
    remaining = n - 1
    stack_v = np.empty(n, np.int64)
    stack_rest = np.empty(n, np.int64)
    stack_sum = np.empty(n, np.int64)
    one = np.int64(1)
    depth = 0
    stack_v[0] = s
    stack_rest[0] = adj[s]
    stack_sum[0] = 0
    visited = one << s
    while depth >= 0:
        rest = stack_rest[depth]
        if rest == 0:
            visited &= ~(one << stack_v[depth])
            depth -= 1
            continue
        low = rest & -rest
        stack_rest[depth] = rest ^ low
        w = 0
        while (low >> w) != one:
            w += 1
        total = stack_sum[depth] + sgn[stack_v[depth], w]
        a = total if total >= 0 else -total
        if a < best[w]:
            if a == 0:
                remaining -= 1
            best[w] = a
            if remaining == 0:
                return
        depth += 1
        stack_v[depth] = w
        visited |= one << w
        stack_rest[depth] = adj[w] & ~visited
        stack_sum[depth] = total


@numba.njit(cache=True)
def _signed_wiener(n, adj, sgn, cap):
    """Sum over unordered pairs; returns cap + 1 as soon as the sum exceeds cap."""
    best = np.empty(n, np.int64)
    total = 0
    for s in range(n):
        _paths_from(n, adj, sgn, s, best)
        for v in range(s + 1, n):
            total += best[v]
        if total > cap:
            return cap + 1
    return total


@numba.njit(cache=True)
def _sweep_signatures(n, adj, eu, ev, codes, cap, out):
    m = eu.shape[0]
    sgn = np.zeros((n, n), np.int64)
    for idx in range(codes.shape[0]):
        c = codes[idx]
        for i in range(m):
            s = -1 if (c >> (m - 1 - i)) & 1 else 1
            sgn[eu[i], ev[i]] = s
            sgn[ev[i], eu[i]] = s
        out[idx] = _signed_wiener(n, adj, sgn, cap)


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.adj, dtype=np.int64)


def _check_general(g: Graph) -> None:
    if g.n > PATH_GUARD:
        raise SizeGuardError(f"simple-path signed distance guarded at n <= {PATH_GUARD}")


def _tree_sums(s: SignedGraph, source: int) -> list[int]:
    """Signed sums along the unique paths from source in a forest."""
    n = s.base.n
    sign_of = {}
    for (u, v), sg in zip(s.edges, s.signs):
        sign_of[u, v] = sign_of[v, u] = sg
    sums = [None] * n
    sums[source] = 0
    stack = [source]
    while stack:
        x = stack.pop()
        row = s.base.adj[x]
        while row:
            low = row & -row
            y = low.bit_length() - 1
            row ^= low
            if sums[y] is None:
                sums[y] = sums[x] + sign_of[x, y]
                stack.append(y)
    return sums


def _is_forest(g: Graph) -> bool:
    comps = 0
    seen = 0
    for v in range(g.n):
        if not seen >> v & 1:
            comps += 1
            seen |= component_mask(g.adj, v)
    return g.m == g.n - comps


def signed_distance(s: SignedGraph, u: int, v: int) -> int:
    g = s.base
    if u == v:
        raise GraphError("signed distance needs u != v")
    if not component_mask(g.adj, u) >> v & 1:
        raise DisconnectedGraphError(f"vertices {u} and {v} lie in different components")
    if _is_forest(g):
        return abs(_tree_sums(s, u)[v])
    _check_general(g)
    best = np.empty(g.n, np.int64)
    _paths_from(g.n, _adj_array(g), s.sign_matrix(), u, best)
    return int(best[v])


def signed_distance_reference(s: SignedGraph, u: int, v: int) -> int:
    """Plain recursive enumeration of all simple u-v paths (tests only)."""
    g = s.base
    sign_of = {}
    for (a, b), sg in zip(s.edges, s.signs):
        sign_of[a, b] = sign_of[b, a] = sg
    best = None

    def rec(x, used, total):
        nonlocal best
        if x == v:
            if best is None or abs(total) < best:
                best = abs(total)
            return
        for y in g.neighbors(x):
            if not used >> y & 1:
                rec(y, used | 1 << y, total + sign_of[x, y])

    rec(u, 1 << u, 0)
    if best is None:
        raise DisconnectedGraphError(f"vertices {u} and {v} lie in different components")
    return best


def signed_wiener(s: SignedGraph) -> int:
    g = s.base
    if not g.is_connected():
        raise DisconnectedGraphError("signed wiener undefined on disconnected graph")
    if g.is_tree():
        total = 0
        for u in range(g.n):
            sums = _tree_sums(s, u)
            total += sum(abs(sums[v]) for v in range(u + 1, g.n))
        return total
    _check_general(g)
    return int(_signed_wiener(g.n, _adj_array(g), s.sign_matrix(), np.int64(1) << 40))


@dataclass
class SignedMinimum:
    value: int
    argmin: list[int]  # signature codes, both members of each flip pair
    visited: int


def _tree_min(g: Graph) -> SignedMinimum:
    m = g.m
    edges = g.edges()
    eindex = {e: i for i, e in enumerate(edges)}
    # path incidence: pairs x edges
    rows = []
    for u in range(g.n):
        parent = {u: None}
        order = [u]
        for x in order:
            for y in g.neighbors(x):
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        for v in range(u + 1, g.n):
            vec = np.zeros(m, dtype=np.int64)
            x = v
            while parent[x] is not None:
                p = parent[x]
                vec[eindex[(min(p, x), max(p, x))]] = 1
                x = p
            rows.append(vec)
    inc = np.array(rows, dtype=np.int64).reshape(-1, m)
    half = 1 << max(m - 1, 0)
    codes = np.arange(half, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    signs = 1 - 2 * ((codes[:, None] >> shifts[None, :]) & 1)
    values = np.abs(signs @ inc.T).sum(axis=1)
    best = int(values.min())
    hits = codes[values == best].tolist()
    full = (1 << m) - 1
    return SignedMinimum(best, sorted(set(hits) | {c ^ full for c in hits}), int(2 * half))


def min_signed_wiener(g: Graph, shard: Optional[Shard] = None, chunk: int = 1 << 14) -> SignedMinimum:
    """W_* over all 2^m signatures, using W_σ = W_{-σ} to scan only half."""
    if not g.is_connected():
        raise DisconnectedGraphError("signed wiener undefined on disconnected graph")
    m = g.m
    if m > SIGNATURE_BUDGET:
        raise BudgetError(f"signature search limited to {SIGNATURE_BUDGET} edges")
    if m == 0:
        return SignedMinimum(0, [0], 1)
    if g.is_tree() and shard is None:
        return _tree_min(g)
    _check_general(g)
    adj = _adj_array(g)
    edges = g.edges()
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    half = 1 << (m - 1)
    start, step = (0, 1) if shard is None else (shard.index, shard.total)
    best = None
    hits: list[int] = []
    visited = 0
    for lo in range(start, half, chunk * step):
        codes = np.arange(lo, min(half, lo + chunk * step), step, dtype=np.int64)
        cap = np.int64(1 << 40) if best is None else np.int64(best)
        out = np.empty(codes.shape[0], np.int64)
        _sweep_signatures(g.n, adj, eu, ev, codes, cap, out)
        visited += codes.shape[0]
        lo_val = int(out.min())
        if best is None or lo_val < best:
            best = lo_val
            hits = codes[out == lo_val].tolist()
        elif lo_val == best:
            hits.extend(codes[out == lo_val].tolist())
    full = (1 << m) - 1
    return SignedMinimum(best, sorted(set(hits) | {c ^ full for c in hits}), 2 * visited)


@dataclass
class CancelingReport:
    k: int
    verdict: str  # "canceling", "not-canceling" or "undefined-removal"
    failures: list[tuple[int, ...]] = field(default_factory=list)
    undefined: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == "canceling"


def canceling_report(s: SignedGraph, k: int) -> CancelingReport:
    """Check W_σ(G - S) = 0 for every S with |S| < k.

    Removals that disconnect the graph are listed separately; they make the
    verdict "undefined-removal" unless a defined removal already fails.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    n = s.base.n
    rep = CancelingReport(k, "canceling")
    for size in range(k):
        for removed in combinations(range(n), size):
            if size >= n:
                continue
            sub = s.delete_vertices(removed) if removed else s
            if not sub.base.is_connected():
                rep.undefined.append(removed)
                continue
            if signed_wiener(sub) != 0:
                rep.failures.append(removed)
                rep.verdict = "not-canceling"
                return rep
    if rep.undefined:
        rep.verdict = "undefined-removal"
    return rep


def is_k_canceling(s: SignedGraph, k: int) -> bool:
    return canceling_report(s, k).ok


def _iter_half_codes(m: int) -> Iterator[int]:
    return iter(range(1 << max(m - 1, 0)))


def exists_k_canceling(g: Graph, k: int, shard: Optional[Shard] = None) -> Optional[SignedGraph]:
    """First signature (in code order) that is k-canceling, or None."""
    if g.m > SIGNATURE_BUDGET:
        raise BudgetError(f"signature search limited to {SIGNATURE_BUDGET} edges")
    if not g.is_connected():
        raise DisconnectedGraphError("signed wiener undefined on disconnected graph")
    if _is_forest(g):
        return None  # an edge's endpoints are always at signed distance 1
    _check_general(g)
    adj = _adj_array(g)
    edges = g.edges()
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    half = 1 << (g.m - 1)
    start, step = (0, 1) if shard is None else (shard.index, shard.total)
    chunk = 1 << 12
    for lo in range(start, half, chunk * step):
        codes = np.arange(lo, min(half, lo + chunk * step), step, dtype=np.int64)
        out = np.empty(codes.shape[0], np.int64)
        _sweep_signatures(g.n, adj, eu, ev, codes, np.int64(0), out)
        for c in codes[out == 0].tolist():
            cand = SignedGraph.from_code(g, c)
            if k == 1 or is_k_canceling(cand, k):
                return cand
    return None


def hop_parity_ok(s: SignedGraph) -> bool:
    """On a tree, signed distance and hop distance share parity."""
    g = s.base
    for u in range(g.n):
        layers, _ = bfs_layers(g.adj, u)
        sums = _tree_sums(s, u)
        for d, layer in enumerate(layers, start=1):
            row = layer
            while row:
                low = row & -row
                v = low.bit_length() - 1
                row ^= low
                if (abs(sums[v]) - d) % 2:
                    return False
    return True
