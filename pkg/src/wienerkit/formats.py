"""Text interchange: graph6 for graphs, small JSON objects for digraphs and signed graphs.

graph6 here is the short form only (n <= 62): one size byte ``n + 63``
followed by the upper triangle, column by column (x01, x02, x12, x03, ...),
six bits per printable byte.

The JSON objects are::

    djson: {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]], "name": "..."}
    sjson: {"n": 3, "edges": [[0, 1], [1, 2]], "signs": [1, -1], "name": "..."}

Arcs and edges are written sorted and the keys in a fixed order, so equal
objects serialise to identical bytes.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Optional

from wienerkit.core.graph import Graph
from wienerkit.errors import GraphError

if TYPE_CHECKING:
    from wienerkit.orient.digraph import Digraph
    from wienerkit.signed import SignedGraph

GRAPH6_MAX = 62


class FormatError(GraphError):
    """Malformed interchange text."""


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX:
        raise FormatError(f"short graph6 form holds at most {GRAPH6_MAX} vertices")
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_decode(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise FormatError("empty graph6 line")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} at offset {pos} outside 63..126")
    n = ord(text[0]) - 63
    if n == 63:
        raise FormatError("long graph6 form (n > 62) is not supported")
    if n == 0:
        raise FormatError("graph6 header gives zero vertices")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) != nbytes:
        raise FormatError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._raw(n, rows)


def read_graph6_lines(text: str) -> list[Graph]:
    return [graph6_decode(ln) for ln in text.splitlines() if ln.strip()]


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def _load(text: str, kind: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{kind}: invalid JSON at line {exc.lineno} col {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise FormatError(f"{kind}: top level must be an object")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"{kind}: field 'n' must be a positive integer")
    if "name" in obj and obj["name"] is not None and not isinstance(obj["name"], str):
        raise FormatError(f"{kind}: field 'name' must be a string")
    return obj


def _pairs(obj: dict, key: str, kind: str) -> list[tuple[int, int]]:
    raw = obj.get(key)
    if not isinstance(raw, list):
        raise FormatError(f"{kind}: field '{key}' must be a list")
    out = []
    for i, item in enumerate(raw):
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise FormatError(f"{kind}: {key}[{i}] must be a pair of integers")
        u, v = item
        if not (0 <= u < obj["n"] and 0 <= v < obj["n"]):
            raise FormatError(f"{kind}: {key}[{i}] out of range for n={obj['n']}")
        out.append((u, v))
    return out


def write_djson(d: "Digraph", name: Optional[str] = None) -> str:
    obj = {"n": d.n, "arcs": [list(a) for a in d.arcs()]}
    if name is not None:
        obj["name"] = name
    return _dump(obj)


def read_djson(text: str) -> "Digraph":
    from wienerkit.orient.digraph import Digraph

    obj = _load(text, "djson")
    arcs = _pairs(obj, "arcs", "djson")
    try:
        return Digraph.from_arcs(obj["n"], arcs)
    except GraphError as exc:
        raise FormatError(f"djson: {exc}") from None


def write_sjson(s: "SignedGraph", name: Optional[str] = None) -> str:
    obj = {"n": s.base.n, "edges": [list(e) for e in s.edges], "signs": list(s.signs)}
    if name is not None:
        obj["name"] = name
    return _dump(obj)


def read_sjson(text: str) -> "SignedGraph":
    from wienerkit.signed import SignedGraph

    obj = _load(text, "sjson")
    edges = _pairs(obj, "edges", "sjson")
    signs = obj.get("signs")
    if not isinstance(signs, list) or len(signs) != len(edges):
        raise FormatError("sjson: field 'signs' must be a list as long as 'edges'")
    for i, s in enumerate(signs):
        if s not in (1, -1) or isinstance(s, bool):
            raise FormatError(f"sjson: signs[{i}] must be 1 or -1")
    try:
        g = Graph.from_edges(obj["n"], edges)
    except GraphError as exc:
        raise FormatError(f"sjson: {exc}") from None
    if g.m != len(edges):
        raise FormatError("sjson: duplicate edge")
    by_edge = {(min(u, v), max(u, v)): s for (u, v), s in zip(edges, signs)}
    return SignedGraph(g, tuple(by_edge[e] for e in g.edges()))
