"""Registry of named, runnable verification claims.

Each claim recomputes one published statement from scratch and records what
it expected next to what it observed. Gates decide the exit status of
``verify all``; reports carry conjecture evidence and never gate.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Any, Callable, Optional

from wienerkit.core.canon import canonical_form
from wienerkit.core.coloring import chromatic_number
from wienerkit.core.distance import degree_upper_bound, radius, wiener
from wienerkit.core.graph import Graph
from wienerkit.core.structure import blocks, cartesian_product, circumference, is_biconnected, line_graph
from wienerkit.enumerate.augment import Shard, iter_connected, iter_trees
from wienerkit.enumerate.regular import regular_graphs
from wienerkit.errors import BudgetError
from wienerkit.families import (broom_T, circulant, cliqued_bipartite, coloring_counterexample, complete,
                                complete_bipartite, cubic_L, cycle, cycle_path_cycle, double_stars, dumbbell,
                                g_nrs, h_npq, h_plus, join_clique_tree, ladder, path, soltes_B, star, theta,
                                cambie_haslegrave)
from wienerkit.formats import graph6_decode, graph6_encode
from wienerkit.orient.digraph import digraph_wiener, tau, tau_graph
from wienerkit.orient.named import directed_cycle, grid_C, grid_D, ladder_max, theta_max
from wienerkit.orient.search import coloring_sweep, enumerate_orientations, iter_digraphs, orient
from wienerkit.signed import (SignedGraph, alternating_path, exists_k_canceling, min_signed_wiener,
                              signed_wiener)
from wienerkit.soltes import min_degree_guard_check, soltes_profile
from wienerkit.varindex import (cambie_haslegrave_terms, classify_equality, critical_exponents, h_value,
                                index_terms, scan_terms, szeged, variable_wiener)

GATE, REPORT = "gate", "report"
FULL_ENV = "WIENERKIT_FULL"


@dataclass(frozen=True)
class Conventions:
    """Flags in effect for a run; every result carries them."""

    tau_self: bool = True
    seed: int = 0
    full: bool = False  # opt-in for the heaviest exhaustive paths

    @classmethod
    def from_env(cls, **kw) -> "Conventions":
        kw.setdefault("full", os.environ.get(FULL_ENV, "") not in ("", "0"))
        return cls(**kw)

    def as_dict(self) -> dict:
        return {"tau": "self" if self.tau_self else "noself", "seed": self.seed, "full": self.full}


@dataclass
class ClaimResult:
    claim_id: str
    kind: str
    status: str  # pass | fail | skipped-budget
    expected: dict
    observed: dict
    runtime: float
    conventions: dict
    counterexample: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return self.kind == GATE and self.status == "fail"

    def payload(self) -> dict:
        """Comparison payload: everything except the runtime."""
        out = asdict(self)
        out.pop("runtime")
        return out


class Tally:
    """Expected/observed pairs collected by a claim body."""

    def __init__(self):
        self.expected: dict[str, Any] = {}
        self.observed: dict[str, Any] = {}
        self.ok = True
        self.counterexample: Optional[str] = None
        self.notes: list[str] = []

    def check(self, label: str, expected, observed, witness: Optional[Graph] = None) -> bool:
        self.expected[label] = _plain(expected)
        self.observed[label] = _plain(observed)
        good = expected == observed
        if not good:
            self.ok = False
            if witness is not None and self.counterexample is None:
                self.counterexample = graph6_encode(witness)
        return good

    def note(self, text: str) -> None:
        self.notes.append(text)


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    return value


@dataclass(frozen=True)
class Claim:
    claim_id: str
    title: str
    kind: str
    body: Callable[..., None]
    criterion: Optional[int] = None


REGISTRY: dict[str, Claim] = {}


def claim(claim_id: str, title: str, kind: str = GATE, criterion: Optional[int] = None):
    def wrap(fn):
        REGISTRY[claim_id] = Claim(claim_id, title, kind, fn, criterion)
        return fn
    return wrap


def run_claim(claim_id: str, conv: Optional[Conventions] = None, **params) -> ClaimResult:
    c = REGISTRY[claim_id]
    conv = conv or Conventions.from_env()
    t = Tally()
    start = time.perf_counter()
    status = None
    try:
        c.body(t, conv, **params)
    except BudgetError as exc:
        status = "skipped-budget"
        t.note(str(exc))
    elapsed = time.perf_counter() - start
    if status is None:
        status = "pass" if t.ok else "fail"
    return ClaimResult(claim_id, c.kind, status, t.expected, t.observed, round(elapsed, 3), conv.as_dict(),
                       t.counterexample, t.notes)


# shared enumeration caches (n <= 8 is small enough to keep in memory)

@lru_cache(maxsize=None)
def connected(n: int) -> tuple[Graph, ...]:
    return tuple(iter_connected(n))


@lru_cache(maxsize=None)
def tree_list(n: int) -> tuple[Graph, ...]:
    return tuple(iter_trees(n))


@lru_cache(maxsize=None)
def chemical(n: int) -> tuple[Graph, ...]:
    return tuple(iter_connected(n, max_degree=4))


def _argset(graphs, key, pick):
    """(best value, sorted canonical forms attaining it)."""
    vals = [(key(g), g) for g in graphs]
    best = pick(v for v, _ in vals)
    return best, sorted({canonical_form(g) for v, g in vals if v == best})


def _canon(g: Graph) -> str:
    return canonical_form(g)


# 1 ---------------------------------------------------------------------------

@claim("folklore-bounds", "C(n,2) <= W <= C(n+1,3) on connected graphs; S_n/P_n extremal trees", criterion=1)
def _folklore(t: Tally, conv: Conventions) -> None:
    bad = 0
    for n in range(1, 9):
        lo, hi = comb(n, 2), comb(n + 1, 3)
        for g in connected(n):
            w = wiener(g)
            if not lo <= w <= hi:
                bad += 1
                t.check(f"bounds n={n}", (lo, hi), w, g)
    t.check("bound violations n<=8", 0, bad)
    for n in range(1, 10):
        trees = tree_list(n)
        wmin, amin = _argset(trees, wiener, min)
        wmax, amax = _argset(trees, wiener, max)
        t.check(f"trees n={n} min", ((n - 1) ** 2, [_canon(star(n))]), (wmin, amin))
        t.check(f"trees n={n} max", (comb(n + 1, 3), [_canon(path(n))]), (wmax, amax))


# 2 ---------------------------------------------------------------------------

@claim("chem8-min", "chemical graphs on 8 vertices: 1929 visited, min W 40 on 6 graphs", criterion=2)
def _chem8(t: Tally, conv: Conventions) -> None:
    graphs = chemical(8)
    best, arg = _argset(graphs, wiener, min)
    t.check("visited", 1929, len(graphs))
    t.check("min W", 40, best)
    t.check("attaining graphs", 6, len(arg))


@claim("chemical-minima", "chemical minima for n <= 8 and the named extremal graphs", criterion=2)
def _chemical(t: Tally, conv: Conventions) -> None:
    _chem8(t, conv)
    for n in range(1, 6):
        _, arg = _argset(chemical(n), wiener, min)
        t.check(f"n={n} extremal set", [_canon(complete(n))], arg)
    for n in (6, 7):
        _, arg = _argset(chemical(n), wiener, min)
        t.check(f"C_{n}(1,2) extremal at n={n}", True, _canon(circulant(n, [1, 2])) in arg)
    _, arg8 = _argset(chemical(8), wiener, min)
    named = {"C_8(1,2)": circulant(8, [1, 2]), "K_4 box P_2": cartesian_product(complete(4), path(2)),
             "K_4,4": complete_bipartite(4, 4)}
    for label, g in named.items():
        t.check(f"{label} extremal at n=8", True, _canon(g) in arg8)
    t.note(f"unfiltered connected graphs on 8 vertices: {len(connected(8))}")


# 3 ---------------------------------------------------------------------------

def _broom_check(t: Tally, n: int, graphs, scope: str) -> None:
    by_delta: dict[int, list[Graph]] = {}
    for g in graphs:
        by_delta.setdefault(g.max_degree, []).append(g)
    for delta in range(2, n):
        pool = by_delta.get(delta, [])
        best, arg = _argset(pool, wiener, max)
        target = broom_T(n, delta)
        t.check(f"{scope} n={n} Δ={delta}", (wiener(target), [_canon(target)]), (best, arg))


@claim("broom-max", "T_{n,Δ} uniquely maximises W among connected graphs with max degree Δ", criterion=3)
def _broom(t: Tally, conv: Conventions) -> None:
    for n in range(3, 11):
        _broom_check(t, n, tree_list(n), "trees")
    for n in range(3, 9):
        _broom_check(t, n, connected(n), "connected")
    # n = 9 streams all 261080 connected graphs; n = 10 (11.7M) only on request
    top = 10 if conv.full else 9
    for n in range(9, top + 1):
        best: dict[int, tuple[int, list]] = {}
        for g in iter_connected(n):
            d, w = g.max_degree, wiener(g)
            cur = best.get(d)
            if cur is None or w > cur[0]:
                best[d] = (w, [g])
            elif w == cur[0]:
                cur[1].append(g)
        for delta in range(2, n):
            w, gs = best[delta]
            target = broom_T(n, delta)
            t.check(f"connected n={n} Δ={delta}", (wiener(target), [_canon(target)]),
                    (w, sorted({_canon(g) for g in gs})))
    if not conv.full:
        t.note("n=10 covered by the tree sweep plus the spanning-tree reduction; set WIENERKIT_FULL=1 "
               "for the full connected sweep")


# 4 ---------------------------------------------------------------------------

@claim("cubic-max", "L_10 attains the maximum W among cubic graphs on 10 vertices", criterion=4)
def _cubic(t: Tally, conv: Conventions) -> None:
    graphs = regular_graphs(10, 3)
    best, arg = _argset(graphs, wiener, max)
    l10 = cubic_L(10)
    t.check("cubic graphs on 10 vertices", 19, len(graphs))
    t.check("max W", best, wiener(l10))
    t.check("L_10 attains", True, _canon(l10) in arg)


# 5 ---------------------------------------------------------------------------

def ladder_formula(n: int) -> int:
    return (8 * n ** 3 + 3 * n ** 2 - 5 * n + 6) // 3


@claim("ladder-wmax", "W_max(P_n box P_2) = (8n^3+3n^2-5n+6)/3 by exhaustive search", criterion=5)
def _ladder(t: Tally, conv: Conventions, n: Optional[int] = None) -> None:
    for k in ([n] if n else [2, 3, 4]):
        g = ladder(k)
        agg = enumerate_orientations(g)
        t.check(f"n={k} orientations", 2 ** (3 * k - 2), agg.all.count)
        t.check(f"n={k} brute force", ladder_formula(k), agg.all.max)
        t.check(f"n={k} named orientation", ladder_formula(k), digraph_wiener(ladder_max(k)))


# 6 ---------------------------------------------------------------------------

@claim("grid-compare", "W(C_{3,n}) > W(D_{3,n}) for n = 4, 6", criterion=6)
def _grid(t: Tally, conv: Conventions) -> None:
    for n in (4, 6):
        c, d = digraph_wiener(grid_C(3, n)), digraph_wiener(grid_D(3, n))
        t.check(f"3x{n}: C > D", True, c > d)
        t.note(f"W(C_3,{n}) = {c}, W(D_3,{n}) = {d}")


# 7 ---------------------------------------------------------------------------

def theta_triples(order: int):
    for a in range(1, order):
        for b in range(1, a + 1):
            for c in range(0, b + 1):
                if a + b + c + 2 <= order:
                    yield a, b, c


@claim("theta-orient", "cycle-forming orientation attains W_max on every Θ with at most 10 vertices", criterion=7)
def _theta(t: Tally, conv: Conventions) -> None:
    bad, total = [], 0
    for a, b, c in theta_triples(10):
        total += 1
        g = theta(a, b, c)
        exhaustive = enumerate_orientations(g).all.max
        if digraph_wiener(theta_max(a, b, c)) != exhaustive:
            bad.append((a, b, c))
            t.counterexample = t.counterexample or graph6_encode(g)
    t.check("mismatches", [], bad)
    t.note(f"{total} Θ graphs checked")


# 8 ---------------------------------------------------------------------------

@claim("coloring-counterexample", "W_min is below every χ-colouring-induced orientation on the drawn graph",
       criterion=8)
def _coloring(t: Tally, conv: Conventions) -> None:
    g = coloring_counterexample()
    agg = enumerate_orientations(g)
    sweep = coloring_sweep(g)
    t.check("edges", 19, g.m)
    t.check("chromatic number", 3, chromatic_number(g))
    t.check("orientations", 2 ** 19, agg.all.count)
    t.check("W_min < colouring min", True, agg.all.min < sweep.min)
    t.note(f"W_min = {agg.all.min}; colouring-induced min = {sweep.min} over {sweep.distinct} orientations")


# 9 ---------------------------------------------------------------------------

def _is_hamiltonian_cycle(d) -> bool:
    if any(d.out_degree(v) != 1 for v in range(d.n)):
        return False
    v, seen = 0, 0
    for _ in range(d.n):
        seen |= 1 << v
        v = d.out[v].bit_length() - 1
    return v == 0 and seen == (1 << d.n) - 1


@claim("cycle-max", "the directed n-cycle is the unique maximiser over all digraphs, n = 3, 4", criterion=9)
def _cycle_max(t: Tally, conv: Conventions) -> None:
    for n in (3, 4):
        best, arg = None, []
        for d in iter_digraphs(n):
            w = digraph_wiener(d)
            if best is None or w > best:
                best, arg = w, [d]
            elif w == best:
                arg.append(d)
        t.check(f"n={n} max", digraph_wiener(directed_cycle(n)), best)
        t.check(f"n={n} maximisers are Hamiltonian directed cycles", (factorial(n - 1), True),
                (len(arg), all(_is_hamiltonian_cycle(d) for d in arg)))


# 10 --------------------------------------------------------------------------

@claim("diameter4-trees", "T_n / T_n' are the maximum-W diameter-4 trees, 5 <= n <= 12", criterion=10)
def _d4(t: Tally, conv: Conventions) -> None:
    from wienerkit.core.distance import diameter
    from wienerkit.families import diameter4_k, diameter4_trees
    for n in range(5, 13):
        pool = [g for g in tree_list(n) if diameter(g) == 4]
        best, arg = _argset(pool, wiener, max)
        tn, tp = diameter4_trees(n)
        expect = sorted({_canon(x) for x in (tn, tp) if x is not None})
        k = diameter4_k(n)
        case = "=" if k * k + k == n - 1 else (">" if k * k + k > n - 1 else "<")
        t.check(f"n={n} (k^2+k {case} n-1)", expect, arg)
        if case == "=":
            t.check(f"n={n} W(T_n) = W(T_n')", True, wiener(tn) == wiener(tp) == best)


# 11 --------------------------------------------------------------------------

@claim("gnrs-invariance", "W(G_{n,r,s}) does not depend on s, n <= 16, r in {3, 4}", criterion=11)
def _gnrs(t: Tally, conv: Conventions) -> None:
    for r in (3, 4):
        for n in range(2 * r, 17):
            values = {s: wiener(g_nrs(n, r, s)) for s in range(1, n - 2 * r + 2)}
            t.check(f"n={n} r={r} distinct W", 1, len(set(values.values())))
            t.check(f"n={n} r={r} radius", r, radius(g_nrs(n, r, 1)))


# 12 --------------------------------------------------------------------------

def cubic_soltes_counts(n: int) -> list[int]:
    """Number of Šoltés vertices in each connected cubic graph of order n."""
    return [len(soltes_profile(g).soltes_vertices) for g in regular_graphs(n, 3)]


@claim("c11-soltes", "C_11 is a Šoltés graph", criterion=12)
def _c11(t: Tally, conv: Conventions) -> None:
    prof = soltes_profile(cycle(11))
    t.check("all Δ_v", [0] * 11, list(prof.deltas))
    t.check("Šoltés graph", True, prof.is_soltes_graph)


@claim("soltes-suite", "cycles, cubic graphs, B(k) and the minimum-degree theorem", criterion=12)
def _soltes(t: Tally, conv: Conventions) -> None:
    _c11(t, conv)
    hits = [n for n in range(3, 21) if soltes_profile(cycle(n)).soltes_vertices]
    t.check("cycles with a Šoltés vertex, n <= 20", [11], hits)
    for n in (4, 6, 8, 10, 12):
        t.check(f"cubic n={n} graphs with Šoltés vertices", 0, sum(1 for c in cubic_soltes_counts(n) if c))
    counts = cubic_soltes_counts(14)
    t.check("cubic n=14 graphs with two Šoltés vertices", 3, counts.count(2))
    t.check("cubic n=14 max Šoltés vertices per graph", 2, max(counts))
    t.note(f"cubic n=14: {counts.count(1)} further graphs have exactly one Šoltés vertex")
    for k in (2, 3):
        t.check(f"B({k}) proportion", Fraction(2 * k, 5 * k + 6), soltes_profile(soltes_B(k)).proportion)
    violations, applied = 0, 0
    for n in range(3, 9):
        for g in connected(n):
            guard = min_degree_guard_check(g)
            applied += guard.applies
            if not guard.holds:
                violations += 1
                t.check("min-degree theorem", True, False, g)
    t.check("min-degree theorem violations, n <= 8", 0, violations)
    t.note(f"minimum-degree guard applied to {applied} graphs")
    bad = 0
    for n in range(3, 9):
        for g in connected(n):
            if circumference(g, stop_at=5) <= 4 and soltes_profile(g).soltes_vertices:
                bad += 1
                t.check("circumference <= 4 excludes Šoltés vertices", True, False, g)
    t.check("circumference <= 4 violations, n <= 8", 0, bad)


# 13 --------------------------------------------------------------------------

def random_connected(rng: random.Random, n: int, extra: float) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@claim("signed-suite", "constant signatures, the double-star conjecture on trees, K_6 canceling", criterion=13)
def _signed(t: Tally, conv: Conventions) -> None:
    rng = random.Random(conv.seed)
    bad = 0
    for _ in range(100):
        g = random_connected(rng, rng.randint(2, 10), rng.random() * 0.6)
        w = wiener(g)
        for sign in (1, -1):
            if signed_wiener(SignedGraph.constant(g, sign)) != w:
                bad += 1
                t.check("constant signature", w, None, g)
    t.check("constant-signature mismatches over 100 graphs", 0, bad)
    for n in range(2, 10):
        t.check(f"W_*(P_{n}) = alternating", signed_wiener(alternating_path(n)), min_signed_wiener(path(n)).value)
    worst = []
    for n in range(2, 9):
        low = min_signed_wiener(path(n)).value
        high = max(min_signed_wiener(d).value for d in double_stars(n)) if n >= 2 else low
        for tr in tree_list(n):
            v = min_signed_wiener(tr).value
            if not low <= v <= high:
                worst.append(graph6_encode(tr))
    t.check("trees n <= 8 outside [W_*(P_n), max double star]", [], worst)
    t.check("K_6 1-canceling", True, exists_k_canceling(complete(6), 1) is not None)
    # smallest bipartite instance with |U|, |V| >= 3 and minimum degree >= 2 is C_6
    t.check("C_6 with cliqued sides 1-canceling", True, exists_k_canceling(cliqued_bipartite(cycle(6)), 1) is not None)


# 14 --------------------------------------------------------------------------

FIXTURE_K, FIXTURE_L = 600, 90


@claim("varindex-suite", "Sz vs W, signs of h(α), tree roots and a three-root G_{k,ℓ}", criterion=14)
def _varindex(t: Tally, conv: Conventions) -> None:
    bad = 0
    for n in range(1, 9):
        for g in connected(n):
            eq = classify_equality(g)
            if not eq.agree or szeged(g) < wiener(g):
                bad += 1
                t.check("Sz >= W, equality iff block-complete", True, False, g)
    t.check("Sz/W violations, n <= 8", 0, bad)
    bad = 0
    for n in range(3, 8):
        for g in connected(n):
            if g.is_complete():
                continue
            terms = index_terms(g)
            pos = all(h_value(terms, a) > 0 for a in (1.5, 2, 3))
            neg = all(h_value(terms, a) < 0 for a in (-1, -0.5))
            if not (pos and neg):
                bad += 1
                t.check("sign of h", True, False, g)
    t.check("h sign violations, non-complete n <= 7", 0, bad)
    bad = 0
    for n in range(3, 10):
        for tr in tree_list(n):
            scan = critical_exponents(tr)
            if scan.count != 1 or not 0 < scan.roots()[0] <= 1:
                bad += 1
                t.check("single tree root in (0, 1]", True, False, tr)
    t.check("trees n <= 9 without exactly one root in (0, 1]", 0, bad)
    small_ok = all(index_terms(cambie_haslegrave(k, l)) == cambie_haslegrave_terms(k, l)
                   for k in range(5, 10) for l in range(1, 6))
    t.check("closed-form G_{k,ℓ} terms agree with the graph", True, small_ok)
    terms = cambie_haslegrave_terms(FIXTURE_K, FIXTURE_L)
    scan = scan_terms(terms)
    widths_ok = all(b - a <= 1e-9 for a, b in scan.brackets)
    flips_ok = all((h_value(terms, a) > 0) != (h_value(terms, b) > 0) for a, b in scan.brackets if a != b)
    t.check(f"G_{{{FIXTURE_K},{FIXTURE_L}}} sign changes >= 3", True, scan.count >= 3)
    t.check("brackets within 1e-9 and re-verified", True, widths_ok and flips_ok)
    t.note("roots " + ", ".join(f"{r:.9f}" for r in scan.roots()))


# 15 --------------------------------------------------------------------------

def apex_formula(n: int, ell: int) -> int:
    return (2 * n * n - 2 * n * ell - 4 * n + ell * ell + 3 * ell + 2) // 2


@claim("apex-formulas", "K_ℓ+T and D_{n-4}(3,1) closed forms", criterion=15)
def _apex(t: Tally, conv: Conventions) -> None:
    bad = []
    for ell in (1, 2, 3):
        for size in range(1, 7):
            for tr in tree_list(size):
                g = join_clique_tree(ell, tr)
                if wiener(g) != apex_formula(g.n, ell):
                    bad.append((ell, graph6_encode(tr)))
    t.check("K_ℓ+T mismatches, ℓ <= 3, |T| <= 6", [], bad)
    for n in range(5, 13):
        g = dumbbell(n - 4, 3, 1)
        t.check(f"D_{n - 4}(3,1) n={n}", 1 + sum((n - i) * i for i in range(1, n - 1)), variable_wiener(g, 1))


# 16 --------------------------------------------------------------------------

@claim("line-ratio", "W(L(G))/W(G) over connected 7-vertex graphs: min S_7 = 5/12, max K_7 = 15", criterion=16)
def _line(t: Tally, conv: Conventions) -> None:
    def ratio(g):
        return Fraction(wiener(line_graph(g)), wiener(g))
    pool = connected(7)
    lo, alo = _argset(pool, ratio, min)
    hi, ahi = _argset(pool, ratio, max)
    t.check("min", (Fraction(5, 12), [_canon(star(7))]), (lo, alo))
    t.check("max", (Fraction(15), [_canon(complete(7))]), (hi, ahi))


# 17 --------------------------------------------------------------------------

def block_shapes(n: int, p: int) -> set[str]:
    out = set()
    total = n - p + 3
    for a in range(2, total - 1):
        b = total - a
        if b >= 2:
            out.add(_canon(cycle_path_cycle(a, p, b)))
    return out


@claim("blocks-shape", "max-W graphs with p blocks are C_a∘P∘C_b; ranking at n = 9; H^+ offset", criterion=17)
def _blocks(t: Tally, conv: Conventions) -> None:
    for n in range(3, 9):
        buckets: dict[int, list[Graph]] = {}
        for g in connected(n):
            buckets.setdefault(blocks(g).count, []).append(g)
        for p in range(2, n):
            _, arg = _argset(buckets[p], wiener, max)
            t.check(f"n={n} p={p} extremal shape", True, set(arg) <= block_shapes(n, p))
    ranked: dict[int, set] = {}
    for g in iter_connected(9):
        if g.min_degree >= 2 and is_biconnected(g):
            ranked.setdefault(wiener(g), set()).add(_canon(g))
    top = sorted(ranked, reverse=True)[:2]
    t.check("n=9 first", [_canon(cycle(9))], sorted(ranked[top[0]]))
    t.check("n=9 second", [_canon(h_npq(9, 1, 2))], sorted(ranked[top[1]]))
    for n in range(7, 17):
        t.check(f"W(H+_{n}) - W(H_{n},2,2)", -1, wiener(h_plus(n)) - wiener(h_npq(n, 2, 2)))


# 18 --------------------------------------------------------------------------

@claim("codec-hygiene", "graph6 round trip n <= 8; 8-way shard union on chemical n = 8", criterion=18)
def _codec(t: Tally, conv: Conventions) -> None:
    bad = 0
    for n in range(1, 9):
        for g in connected(n):
            if graph6_decode(graph6_encode(g)) != g:
                bad += 1
                t.check("round trip", True, False, g)
    t.check("round-trip failures", 0, bad)
    whole = sorted(_canon(g) for g in chemical(8))
    parts: list[str] = []
    for i in range(8):
        parts.extend(_canon(g) for g in iter_connected(8, max_degree=4, shard=Shard(i, 8)))
    t.check("shard union = unsharded (multiset)", whole, sorted(parts))


# reports -------------------------------------------------------------------

@claim("conj-4regular", "chemical minimisers at n = 9, 10 are 4-regular", kind=REPORT)
def _four_regular(t: Tally, conv: Conventions) -> None:
    for n in (9, 10):
        best, arg = None, []
        visited = 0
        for g in iter_connected(n, max_degree=4):
            visited += 1
            w = wiener(g)
            if best is None or w < best:
                best, arg = w, [g]
            elif w == best:
                arg.append(g)
        t.check(f"n={n} all minimisers 4-regular", True, all(g.min_degree == g.max_degree == 4 for g in arg))
        t.note(f"n={n}: {visited} chemical graphs, min W {best} on {len(arg)} graphs")


@claim("conj-acyclic", "W_min is attained by an acyclic orientation, connected n <= 6", kind=REPORT)
def _acyclic(t: Tally, conv: Conventions) -> None:
    bad, seen = [], 0
    for n in range(2, 7):
        for g in connected(n):
            agg = enumerate_orientations(g)
            seen += 1
            if agg.acyclic.min != agg.all.min:
                bad.append(graph6_encode(g))
    t.check("graphs where no acyclic orientation attains W_min", [], bad)
    t.note(f"{seen} graphs checked")


def _tau_of_max(h: Graph, self_count: bool) -> int:
    """Largest τ among the W-maximising orientations of h."""
    agg = enumerate_orientations(h)
    return max(tau(orient(h, code), self_count) for code in agg.all.argmax)


@claim("prod-bound", "W_max(G□H) >= W_max(G)τ(H) + W_max(H)|V(G)|^2 for |E(G□H)| <= 14", kind=REPORT)
def _prod(t: Tally, conv: Conventions) -> None:
    pool = [g for n in range(2, 8) for g in connected(n) if g.m <= 14]
    wmax = {g: enumerate_orientations(g).all.max for g in pool}
    readings = {}
    for self_count in (True, False):
        readings[("graph", self_count)] = {h: tau_graph(h, self_count) for h in pool}
        readings[("orientation", self_count)] = {}
    pairs = [(g, h) for g in pool for h in pool if g.m * h.n + h.m * g.n <= 14]
    for _, h in pairs:
        for self_count in (True, False):
            cache = readings[("orientation", self_count)]
            if h not in cache:
                cache[h] = _tau_of_max(h, self_count)
    products = {(g, h): enumerate_orientations(cartesian_product(g, h)).all.max for g, h in pairs}
    selected = "self" if conv.tau_self else "noself"
    for (reading, self_count), taus in readings.items():
        conv_name = "self" if self_count else "noself"
        bad = [(graph6_encode(g), graph6_encode(h)) for g, h in pairs
               if products[(g, h)] < wmax[g] * taus[h] + wmax[h] * g.n ** 2]
        t.check(f"τ of {reading}, {conv_name}: violations", [], bad)
    t.note(f"{len(pairs)} ordered pairs; selected convention {selected}")


@claim("degree-bound", "W(G) <= C(n-Δ+δ,2)(n+2Δ)/(δ+1) + 2n(n-1) on connected n <= 9", kind=REPORT)
def _degree_bound(t: Tally, conv: Conventions) -> None:
    bad, seen = 0, 0
    for n in range(1, 10):
        for g in (connected(n) if n <= 8 else iter_connected(n)):
            seen += 1
            if wiener(g) > degree_upper_bound(g):
                bad += 1
                t.check("bound", True, False, g)
    t.check("violations", 0, bad)
    t.note(f"{seen} graphs checked")


def registry_listing() -> list[str]:
    return [f"{c.claim_id:24s} {c.kind:6s} {c.title}" for c in REGISTRY.values()]
