"""Exhaustive orientation sweeps.

An orientation of G is encoded by an integer ``code`` over the m edges in
lexicographic order: edge i = (u, v), u < v, points v -> u iff bit m-1-i of
the code is set. Counting codes upward therefore walks the direction vectors
in lexicographic order. Each code is evaluated from scratch by a compiled
kernel; ``orientation_wiener`` is the plain-Python reference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Optional

import numba
import numpy as np

from wienerkit.core.coloring import chromatic_number, proper_colorings
from wienerkit.core.graph import Graph
from wienerkit.enumerate.augment import Shard
from wienerkit.errors import BudgetError, GraphError
from wienerkit.orient.digraph import Digraph, digraph_wiener, from_graph, is_acyclic, is_strongly_connected

EDGE_BUDGET = 30
KERNEL_MAX_N = 62
CHUNK = 1 << 18


def directions_of(code: int, m: int) -> list[int]:
    return [(code >> (m - 1 - i)) & 1 for i in range(m)]


def code_of(directions) -> int:
    code = 0
    for b in directions:
        code = code << 1 | (b & 1)
    return code


def orient(g: Graph, code: int) -> Digraph:
    return from_graph(g, directions_of(code, g.m))


def code_of_digraph(g: Graph, d: Digraph) -> int:
    bits = []
    for u, v in g.edges():
        if d.has_arc(u, v) == d.has_arc(v, u):
            raise GraphError("digraph is not an orientation of the graph")
        bits.append(0 if d.has_arc(u, v) else 1)
    return code_of(bits)


def orientation_wiener(g: Graph, code: int) -> int:
    return digraph_wiener(orient(g, code))


@numba.njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@numba.njit(cache=True)
def _sweep(n, eu, ev, codes, wout, acyc, strong):
    m = eu.shape[0]
    out = np.zeros(n, np.int64)
    one = np.int64(1)
    full = (one << n) - one
    for idx in range(codes.shape[0]):
        code = codes[idx]
        for v in range(n):
            out[v] = 0
        for i in range(m):
            if (code >> (m - 1 - i)) & one:
                out[ev[i]] |= one << eu[i]
            else:
                out[eu[i]] |= one << ev[i]
        total = 0
        a_ok = True
        s_ok = True
        for s in range(n):
            seen = one << s
            frontier = seen
            k = 0
            while frontier:
                nxt = np.int64(0)
                for v in range(n):
                    if (frontier >> v) & one:
                        nxt |= out[v]
                if (nxt >> s) & one:
                    a_ok = False
                frontier = nxt & ~seen
                k += 1
                total += k * _popcount(frontier)
                seen |= frontier
            if seen != full:
                s_ok = False
        wout[idx] = total
        acyc[idx] = a_ok
        strong[idx] = s_ok


@dataclass
class Extremes:
    count: int = 0
    max: Optional[int] = None
    min: Optional[int] = None
    argmax: list[int] = field(default_factory=list)
    argmin: list[int] = field(default_factory=list)

    def absorb(self, codes: np.ndarray, values: np.ndarray) -> None:
        if codes.size == 0:
            return
        self.count += int(codes.size)
        hi, lo = int(values.max()), int(values.min())
        for attr, arg, val, better in (("max", "argmax", hi, hi.__gt__), ("min", "argmin", lo, lo.__lt__)):
            cur = getattr(self, attr)
            hits = codes[values == val].tolist()
            if cur is None or better(cur):
                setattr(self, attr, val)
                setattr(self, arg, hits)
            elif val == cur:
                getattr(self, arg).extend(hits)

    def merge(self, other: "Extremes") -> "Extremes":
        out = Extremes(self.count + other.count)
        for attr, arg, pick in (("max", "argmax", max), ("min", "argmin", min)):
            vals = [getattr(e, attr) for e in (self, other) if getattr(e, attr) is not None]
            if not vals:
                continue
            best = pick(vals)
            setattr(out, attr, best)
            setattr(out, arg, sorted(c for e in (self, other) if getattr(e, attr) == best for c in getattr(e, arg)))
        return out

    def normalise(self) -> "Extremes":
        self.argmax.sort()
        self.argmin.sort()
        return self


@dataclass
class OrientationAggregate:
    """Max/min of W over all visited orientations, and over the acyclic and
    strongly connected ones; arg lists hold orientation codes."""

    m: int
    all: Extremes = field(default_factory=Extremes)
    acyclic: Extremes = field(default_factory=Extremes)
    strong: Extremes = field(default_factory=Extremes)

    def merge(self, other: "OrientationAggregate") -> "OrientationAggregate":
        if self.m != other.m:
            raise GraphError("cannot merge sweeps of different graphs")
        return OrientationAggregate(self.m, self.all.merge(other.all), self.acyclic.merge(other.acyclic),
                                    self.strong.merge(other.strong))


def _edge_arrays(g: Graph):
    edges = g.edges()
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    return eu, ev


def evaluate_codes(g: Graph, codes: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """W, acyclic flag and strong flag for each code (compiled kernel)."""
    if g.n > KERNEL_MAX_N:
        raise BudgetError(f"orientation kernel handles n <= {KERNEL_MAX_N}")
    eu, ev = _edge_arrays(g)
    codes = np.ascontiguousarray(codes, dtype=np.int64)
    w = np.empty(codes.shape[0], np.int64)
    a = np.empty(codes.shape[0], np.bool_)
    s = np.empty(codes.shape[0], np.bool_)
    _sweep(g.n, eu, ev, codes, w, a, s)
    return w, a, s


def enumerate_orientations(g: Graph, shard: Optional[Shard] = None,
                           visitor: Optional[Callable[[np.ndarray, np.ndarray, np.ndarray, np.ndarray], None]] = None,
                           chunk: int = CHUNK) -> OrientationAggregate:
    """Visit every orientation code (or those ≡ i mod N for shard i/N) in increasing order."""
    m = g.m
    if m > EDGE_BUDGET:
        raise BudgetError(f"exhaustive orientation search limited to {EDGE_BUDGET} edges")
    agg = OrientationAggregate(m)
    start, step = (0, 1) if shard is None else (shard.index, shard.total)
    total = 1 << m
    span = chunk * step
    for lo in range(start, total, span):
        codes = np.arange(lo, min(total, lo + span), step, dtype=np.int64)
        w, a, s = evaluate_codes(g, codes)
        agg.all.absorb(codes, w)
        agg.acyclic.absorb(codes[a], w[a])
        agg.strong.absorb(codes[s], w[s])
        if visitor is not None:
            visitor(codes, w, a, s)
    for e in (agg.all, agg.acyclic, agg.strong):
        e.normalise()
    return agg


def w_max(g: Graph) -> int:
    return enumerate_orientations(g).all.max


def w_min(g: Graph) -> int:
    return enumerate_orientations(g).all.min


def reference_aggregate(g: Graph) -> OrientationAggregate:
    """Same sweep through the plain-Python digraph routines (small m only)."""
    m = g.m
    if m > 16:
        raise BudgetError("reference sweep limited to 16 edges")
    agg = OrientationAggregate(m)
    for code in range(1 << m):
        d = orient(g, code)
        w = np.array([digraph_wiener(d)])
        c = np.array([code])
        agg.all.absorb(c, w)
        if is_acyclic(d):
            agg.acyclic.absorb(c, w)
        if is_strongly_connected(d):
            agg.strong.absorb(c, w)
    return agg


def coloring_code(g: Graph, coloring) -> int:
    """Arcs run from the larger colour to the smaller."""
    bits = []
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise GraphError("colouring is not proper")
        bits.append(0 if coloring[u] > coloring[v] else 1)
    return code_of(bits)


def coloring_induced_orientations(g: Graph, k: int) -> Iterator[int]:
    """One orientation code per proper k-colouring (duplicates possible)."""
    for col in proper_colorings(g, k):
        yield coloring_code(g, col)


@dataclass
class ColoringSweep:
    k: int
    chromatic: int
    below_chromatic: bool
    colorings: int
    distinct: int
    min: Optional[int]
    max: Optional[int]
    argmin: list[int]


def coloring_sweep(g: Graph, k: Optional[int] = None) -> ColoringSweep:
    """W over all k-colouring-induced orientations (k defaults to χ(G))."""
    chi = chromatic_number(g)
    k = chi if k is None else k
    codes = list(coloring_induced_orientations(g, k))
    uniq = np.array(sorted(set(codes)), dtype=np.int64)
    if uniq.size == 0:
        return ColoringSweep(k, chi, k < chi, 0, 0, None, None, [])
    w, _, _ = evaluate_codes(g, uniq)
    lo = int(w.min())
    return ColoringSweep(k, chi, k < chi, len(codes), int(uniq.size), lo, int(w.max()),
                         uniq[w == lo].tolist())


def iter_digraphs(n: int) -> Iterator[Digraph]:
    """All 2^(n(n-1)) labelled digraphs on n vertices (n <= 4)."""
    if n > 4:
        raise BudgetError("digraph enumeration limited to n <= 4")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for bits in product((0, 1), repeat=len(pairs)):
        rows = [0] * n
        for (u, v), b in zip(pairs, bits):
            if b:
                rows[u] |= 1 << v
        yield Digraph(n, tuple(rows))
