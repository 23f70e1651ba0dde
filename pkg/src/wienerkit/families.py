"""Named graphs and extremal constructions.

Every generator is deterministic: the same parameters give the same labelled
graph, which keeps canonical-form regression fixtures stable.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from wienerkit.core.graph import MAX_VERTICES, Graph
from wienerkit.core.structure import cartesian_product
from wienerkit.errors import CapacityError, GraphError


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


class _Builder:
    """Collects edges while handing out fresh vertex ids."""

    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def add(self, k: int = 1) -> list[int]:
        ids = list(range(self.n, self.n + k))
        self.n += k
        return ids

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def path(self, vs: Sequence[int]) -> None:
        for a, b in zip(vs, vs[1:]):
            self.edge(a, b)

    def clique(self, vs: Sequence[int]) -> None:
        for a, b in combinations(vs, 2):
            self.edge(a, b)

    def graph(self) -> Graph:
        if self.n > MAX_VERTICES:
            raise CapacityError(f"construction has {self.n} vertices (cap {MAX_VERTICES})")
        return Graph.from_edges(self.n, self.edges)


# standard graphs

def path(n: int) -> Graph:
    _check(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """S_n: one centre (vertex 0) and n - 1 leaves."""
    _check(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    _check(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _check(a >= 1 and b >= 1, "both sides must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def circulant(n: int, jumps: Sequence[int]) -> Graph:
    _check(n >= 3, "circulant needs n >= 3")
    _check(all(1 <= j <= n // 2 for j in jumps), "jumps must lie in 1..n/2")
    edges = set()
    for i in range(n):
        for j in jumps:
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def heawood() -> Graph:
    # LCF notation [5, -5]^7
    edges = {(i, (i + 1) % 14) for i in range(14)}
    for i in range(14):
        j = (i + (5 if i % 2 == 0 else -5)) % 14
        edges.add((min(i, j), max(i, j)))
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    return Graph.from_edges(14, sorted(edges))


def hypercube(d: int) -> Graph:
    _check(1 <= d <= 6, "hypercube dimension must be 1..6")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def ladder(n: int) -> Graph:
    """P_n box P_2; vertex (i, side) is numbered 2i + side."""
    return cartesian_product(path(n), path(2))


_STANDARD = {
    "path": path, "star": star, "cycle": cycle, "complete": complete,
    "complete_bipartite": complete_bipartite, "circulant": lambda n, *j: circulant(n, j),
    "petersen": petersen, "heawood": heawood, "hypercube": hypercube, "ladder": ladder,
}


def standard(name: str, *params: int) -> Graph:
    """Dispatch by name, e.g. ``standard("circulant", 8, 1, 3)``."""
    try:
        fn = _STANDARD[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(sorted(_STANDARD))}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {name}: {exc}") from None


# trees and constructions

def broom_T(n: int, delta: int) -> Graph:
    """T_{n,Δ}: a path on n - Δ + 1 vertices with Δ - 1 extra leaves at vertex 0."""
    _check(delta >= 2 and n >= delta + 1, "need delta >= 2 and n >= delta + 1")
    b = _Builder()
    spine = b.add(n - delta + 1)
    b.path(spine)
    for leaf in b.add(delta - 1):
        b.edge(spine[0], leaf)
    return b.graph()


def _k4_minus_edge(b: _Builder) -> tuple[int, int, int, int]:
    """Returns (x, m1, m2, y) with the missing edge between x and y."""
    x, m1, m2, y = b.add(4)
    b.clique([x, m1, m2, y])
    b.edges.remove((x, y))
    return x, m1, m2, y


def cubic_L(n: int) -> Graph:
    """Cubic chain of K4-minus-an-edge blocks joined by bridges.

    Both ends are a K4 minus an edge whose two degree-2 vertices share an
    extra neighbour carrying the bridge. For n = 0 (mod 4) the right end is
    instead a triangle hooked to both degree-2 vertices of a K4 minus an edge.
    """
    _check(n >= 10 and n % 2 == 0, "cubic_L needs an even order n >= 10")
    b = _Builder()

    def five_end():
        x, _, _, y = _k4_minus_edge(b)
        (c,) = b.add()
        b.edge(x, c)
        b.edge(y, c)
        return c

    left = five_end()
    middle = (n - 10) // 4 if n % 4 == 2 else (n - 12) // 4
    hook = left
    for _ in range(middle):
        x, _, _, y = _k4_minus_edge(b)
        b.edge(hook, x)
        hook = y
    if n % 4 == 2:
        right = five_end()
    else:
        right, o, u = b.add(3)
        b.clique([right, o, u])
        p, _, _, t = _k4_minus_edge(b)
        b.edge(o, p)
        b.edge(u, t)
    b.edge(hook, right)
    return b.graph()


def theta_paths(a: int, b: int, c: int) -> tuple[int, int, list[list[int]]]:
    """End vertices and the three internal vertex lists of Θ_{a,b,c}."""
    _check(a >= b >= c >= 0 and b >= 1, "need a >= b >= c >= 0 and b >= 1")
    u1, u2 = 0, 1
    nxt = 2
    inner = []
    for k in (a, b, c):
        inner.append(list(range(nxt, nxt + k)))
        nxt += k
    return u1, u2, inner


def theta(a: int, b: int, c: int) -> Graph:
    """Two vertices joined by internally disjoint paths of lengths a+1, b+1, c+1."""
    u1, u2, inner = theta_paths(a, b, c)
    bld = _Builder()
    bld.add(a + b + c + 2)
    for vs in inner:
        bld.path([u1] + vs + [u2])
    return bld.graph()


def dumbbell(c: int, a: int, b: int) -> Graph:
    """D_c(a, b): K_a and K_b bridged by a path of c vertices (attach at lowest ids)."""
    _check(c >= 1 and a >= 1 and b >= 1, "sizes must be positive")
    _check(a != 2 and b != 2, "dumbbell ends of size 2 are excluded by convention")
    bld = _Builder()
    ka = bld.add(a)
    bld.clique(ka)
    mid = bld.add(c)
    kb = bld.add(b)
    bld.clique(kb)
    bld.path([ka[0]] + mid + [kb[0]])
    return bld.graph()


def barbell(c: int, left: tuple[int, int], right: tuple[int, int]) -> Graph:
    """Two complete bipartite graphs joined through a path of c vertices."""
    _check(c >= 1 and min(left) >= 1 and min(right) >= 1, "sizes must be positive")
    bld = _Builder()

    def kab(p, q):
        xs, ys = bld.add(p), bld.add(q)
        for x in xs:
            for y in ys:
                bld.edge(x, y)
        return xs[0]

    a0 = kab(*left)
    mid = bld.add(c)
    b0 = kab(*right)
    bld.path([a0] + mid + [b0])
    return bld.graph()


def double_broom(n: int, a: int, b: int) -> Graph:
    """D(n, a, b): a path on n - a - b vertices with a and b leaves at its ends."""
    _check(a >= 1 and b >= 1 and n >= a + b + 2, "need a, b >= 1 and n >= a + b + 2")
    bld = _Builder()
    spine = bld.add(n - a - b)
    bld.path(spine)
    for leaf in bld.add(a):
        bld.edge(spine[0], leaf)
    for leaf in bld.add(b):
        bld.edge(spine[-1], leaf)
    return bld.graph()


def k_n_c(n: int, c: int) -> Graph:
    """K_c with n - c pendants spread evenly; lower core ids get the larger share."""
    _check(1 <= c <= n, "need 1 <= c <= n")
    bld = _Builder()
    core = bld.add(c)
    bld.clique(core)
    q, r = divmod(n - c, c)
    for i, v in enumerate(core):
        for leaf in bld.add(q + 1 if i < r else q):
            bld.edge(v, leaf)
    return bld.graph()


def _two_level_tree(n: int, children: int, rich: int, k: int) -> Graph:
    bld = _Builder()
    (root,) = bld.add()
    for i in range(children):
        (ch,) = bld.add()
        bld.edge(root, ch)
        for leaf in bld.add(k if i < rich else k - 1):
            bld.edge(ch, leaf)
    g = bld.graph()
    assert g.n == n
    return g


def diameter4_k(n: int) -> int:
    k = 0
    while (k + 1) ** 2 <= n - 1:
        k += 1
    return k


def diameter4_tree(n: int) -> Graph:
    """T_n: root of degree k; n - k^2 - 1 children carry k leaves, the rest k - 1."""
    _check(n >= 5, "need n >= 5")
    k = diameter4_k(n)
    _check(k * k + k >= n - 1, "T_n needs k^2 + k >= n - 1")
    return _two_level_tree(n, k, n - k * k - 1, k)


def diameter4_tree_prime(n: int) -> Graph:
    """T_n': root of degree k + 1; n - k^2 - k - 1 children carry k leaves."""
    _check(n >= 5, "need n >= 5")
    k = diameter4_k(n)
    _check(k * k + k <= n - 1, "T_n' needs k^2 + k <= n - 1")
    return _two_level_tree(n, k + 1, n - k * k - k - 1, k)


def diameter4_trees(n: int) -> tuple[Graph | None, Graph | None]:
    """(T_n, T_n'), with None on the side whose condition fails."""
    k = diameter4_k(n)
    t = diameter4_tree(n) if k * k + k >= n - 1 else None
    tp = diameter4_tree_prime(n) if k * k + k <= n - 1 else None
    return t, tp


def h_npq(n: int, p: int, q: int) -> Graph:
    """Three internally disjoint paths of lengths p, q, n - p - q + 1 between two ends."""
    r = n - p - q + 1
    _check(1 <= p <= q <= r and q > 1, "need 1 <= p <= q <= n - p - q + 1 and q > 1")
    bld = _Builder()
    x, y = bld.add(2)
    for length in (p, q, r):
        bld.path([x] + bld.add(length - 1) + [y])
    return bld.graph()


def h_plus(n: int) -> Graph:
    """H_{n,2,2} plus the edge between the middles of its two 2-paths."""
    _check(n >= 7, "need n >= 7")
    g = h_npq(n, 2, 2)
    # builder order: ends 0, 1; then the middle of the first and second 2-paths
    return g.add_edges([(2, 3)])


def g_nrs(n: int, r: int, s: int) -> Graph:
    """A 2r-cycle v1..v2r with v2 blown up to K_s and v3 to K_{n-2r+2-s}."""
    _check(r >= 3 and n >= 2 * r and 1 <= s <= n - 2 * r + 1, "need r >= 3, n >= 2r, 1 <= s <= n - 2r + 1")
    bld = _Builder()
    v1 = bld.add(1)[0]
    ks = bld.add(s)
    kt = bld.add(n - 2 * r + 2 - s)
    rest = bld.add(2 * r - 3)  # v4 .. v2r
    bld.clique(ks)
    bld.clique(kt)
    for a in ks:
        bld.edge(v1, a)
        for b in kt:
            bld.edge(a, b)
    for b in kt:
        bld.edge(b, rest[0])
    bld.path(rest + [v1])
    return bld.graph()


def cambie_haslegrave(k: int, ell: int) -> Graph:
    """G_{k,ℓ}: K_k minus a Hamiltonian cycle, all joined to the end of a path of length ℓ."""
    _check(k >= 5 and ell >= 1, "need k >= 5 and ell >= 1")
    bld = _Builder()
    core = bld.add(k)
    cyc = {(i, (i + 1) % k) for i in range(k)} | {((i + 1) % k, i) for i in range(k)}
    for a, b in combinations(core, 2):
        if (a, b) not in cyc:
            bld.edge(a, b)
    tail = bld.add(ell + 1)
    for v in core:
        bld.edge(v, tail[0])
    bld.path(tail)
    return bld.graph()


def soltes_B(k: int) -> Graph:
    """B(k): two hubs joined by k paths of length 6 and one of length 5."""
    _check(k >= 2, "need k >= 2")
    bld = _Builder()
    x, y = bld.add(2)
    for _ in range(k):
        bld.path([x] + bld.add(5) + [y])
    bld.path([x] + bld.add(4) + [y])
    return bld.graph()


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices (cap {MAX_VERTICES})")
    edges = g.edges() + [(g.n + u, g.n + v) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(n, edges)


def join_clique_tree(ell: int, tree: Graph) -> Graph:
    """K_ℓ + T, clique on the first ℓ ids."""
    _check(ell >= 1, "need ell >= 1")
    _check(tree.is_tree(), "second argument must be a tree")
    return join(complete(ell), tree)


def blowup(g: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex i by an independent set of sizes[i] vertices."""
    _check(len(sizes) == g.n, "one size per vertex required")
    _check(all(s >= 1 for s in sizes), "sizes must be positive")
    total = sum(sizes)
    if total > MAX_VERTICES:
        raise CapacityError(f"blowup has {total} vertices (cap {MAX_VERTICES})")
    start = [0]
    for s in sizes:
        start.append(start[-1] + s)
    edges = []
    for u, v in g.edges():
        for a in range(start[u], start[u + 1]):
            for b in range(start[v], start[v + 1]):
                edges.append((a, b))
    return Graph.from_edges(total, edges)


def cycle_path_cycle(a: int, p: int, b: int) -> Graph:
    """C_a, a path on p - 1 vertices, C_b glued end to end (C_2 means K_2).

    This graph has p blocks and a + b + p - 3 vertices.
    """
    _check(a >= 2 and b >= 2 and p >= 2, "need a, b >= 2 and p >= 2")
    bld = _Builder()
    spine = bld.add(p - 1)
    bld.path(spine)
    for size, end in ((a, spine[0]), (b, spine[-1])):
        others = bld.add(size - 1)
        bld.path([end] + others)
        if size >= 3:
            bld.edge(others[-1], end)
    return bld.graph()


def coloring_counterexample() -> Graph:
    """Two triangles a b f and c d e joined by the edge b c; a, f, d and e
    each carry three pendant vertices. 18 vertices, 19 edges, χ = 3."""
    bld = _Builder()
    a, b, c, d, e, f = bld.add(6)
    bld.clique([a, b, f])
    bld.clique([c, d, e])
    bld.edge(b, c)
    for hub in (a, f, d, e):
        for leaf in bld.add(3):
            bld.edge(hub, leaf)
    return bld.graph()


def double_stars(n: int) -> list[Graph]:
    """All n-vertex double stars up to isomorphism, the star S_n included."""
    _check(n >= 2, "need n >= 2")
    out = [star(n)]
    for a in range(1, (n - 2) // 2 + 1):
        out.append(double_broom(n, a, n - 2 - a))
    return out


def cliqued_bipartite(g: Graph) -> Graph:
    """Add every edge inside each colour class of a connected bipartite graph."""
    _check(g.is_connected(), "graph must be connected")
    side = [-1] * g.n
    side[0] = 0
    queue = [0]
    for x in queue:
        for y in g.neighbors(x):
            if side[y] < 0:
                side[y] = 1 - side[x]
                queue.append(y)
            elif side[y] == side[x]:
                raise GraphError("graph is not bipartite")
    extra = [(u, v) for u, v in combinations(range(g.n), 2) if side[u] == side[v]]
    return g.add_edges(extra)
