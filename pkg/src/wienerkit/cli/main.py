"""``wienerkit`` command line.

Graphs come in as graph6 lines (file or ``-`` for stdin); digraphs and signed
graphs as the djson/sjson objects of ``wienerkit.formats``. Reports go to
stdout or ``--out-file`` as JSON (default) or CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from wienerkit.cli import claims
from wienerkit.core.canon import canonical_form
from wienerkit.core.distance import eccentricity_profile, wiener, wiener_dimension
from wienerkit.core.graph import Graph
from wienerkit.core.structure import blocks
from wienerkit.enumerate.augment import Shard
from wienerkit.enumerate.search import ClassFilter, SearchRecord
from wienerkit.errors import GraphError
from wienerkit.formats import graph6_decode, graph6_encode, read_graph6_lines, read_sjson, write_djson
from wienerkit.orient.search import OrientationAggregate, coloring_sweep, enumerate_orientations, orient
from wienerkit.signed import canceling_report, exists_k_canceling, min_signed_wiener, signed_wiener
from wienerkit.soltes import soltes_profile
from wienerkit.varindex import critical_exponents, szeged

INVARIANTS = ("w", "sz", "dim", "ecc", "blocks")
OBJECTIVES = {
    "w": wiener,
    "sz": szeged,
    "dim": wiener_dimension,
    "diameter": lambda g: eccentricity_profile(g).diameter,
    "radius": lambda g: eccentricity_profile(g).radius,
}


# io helpers

def _read_text(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    with open(src, encoding="ascii") as fh:
        return fh.read()


def _emit(args, rows: list[dict], stream=None) -> None:
    out = stream or (open(args.out_file, "w", encoding="utf-8") if args.out_file else sys.stdout)
    try:
        if args.out == "csv":
            cols: list[str] = []
            for r in rows:
                cols += [k for k in r if k not in cols]
            w = csv.DictWriter(out, fieldnames=cols, lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        else:
            out.write(json.dumps(rows if len(rows) != 1 else rows[0], indent=2, ensure_ascii=False) + "\n")
    finally:
        if out is not sys.stdout and stream is None:
            out.close()


def parse_filter(text: Optional[str]) -> ClassFilter:
    """``chemical``, ``tree``, ``biconnected``, ``maxdeg=k``, ``exactdeg=k``,
    ``regular=k``, ``diameter=d``, ``radius=r``, ``blocks=p``, ``circ<=c``;
    comma separated."""
    kw: dict = {}
    for tok in filter(None, (text or "").split(",")):
        tok = tok.strip()
        if tok == "chemical":
            kw["max_degree"] = 4
        elif tok == "tree":
            kw["tree"] = True
        elif tok == "biconnected":
            kw["connectivity"] = 2
        elif tok.startswith("circ<="):
            kw["max_circumference"] = int(tok[6:])
        elif "=" in tok:
            key, val = tok.split("=", 1)
            field = {"maxdeg": "max_degree", "exactdeg": "exact_max_degree", "regular": "regular",
                     "diameter": "diameter", "radius": "radius", "blocks": "blocks"}.get(key)
            if field is None:
                raise GraphError(f"unknown filter key {key!r}")
            kw[field] = int(val)
        else:
            raise GraphError(f"unknown filter {tok!r}")
    return ClassFilter(**kw)


def _shards(args) -> list[Shard]:
    if args.shards:
        return [Shard.parse(args.shards)]
    t = max(1, args.threads)
    return [Shard(i, t) for i in range(t)] if t > 1 else [None]


def _map(args, fn, jobs: list) -> list:
    if args.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


# invariant

def invariant_row(g: Graph, which: Iterable[str]) -> dict:
    row: dict = {"graph6": graph6_encode(g), "n": g.n, "m": g.m}
    for key in which:
        if key == "w":
            row["w"] = wiener(g)
        elif key == "sz":
            row["sz"] = szeged(g)
        elif key == "dim":
            row["dim"] = wiener_dimension(g)
        elif key == "ecc":
            prof = eccentricity_profile(g)
            row.update(eccentricities=list(prof.eccentricities), diameter=prof.diameter, radius=prof.radius)
        elif key == "blocks":
            bd = blocks(g)
            row.update(blocks=bd.count, cut_vertices=sorted(bd.cut_vertices), block_complete=bd.all_complete,
                       cactus=bd.is_cactus)
        else:
            raise GraphError(f"unknown invariant {key!r}")
    return row


def cmd_invariant(args) -> int:
    which = [w for w in args.which.split(",") if w]
    _emit(args, [invariant_row(g, which) for g in read_graph6_lines(_read_text(args.source))])
    return 0


# enumerate

def _enum_job(job):
    n, filt, shard, objective, direction = job
    if objective is None:
        return [canonical_form(g) for g in filt.stream(n, shard)]
    rec = SearchRecord(objective, direction)
    fn = OBJECTIVES[objective]
    for g in filt.stream(n, shard):
        rec.offer(g, fn(g))
    return rec


def cmd_enumerate(args) -> int:
    filt = parse_filter(args.filter)
    if args.extremal:
        obj, direction = args.extremal
        if obj not in OBJECTIVES:
            raise GraphError(f"unknown objective {obj!r}; choose from {', '.join(OBJECTIVES)}")
        jobs = [(args.n, filt, s, obj, direction) for s in _shards(args)]
        recs = _map(args, _enum_job, jobs)
        rec = recs[0]
        for r in recs[1:]:
            rec = rec.merge(r)
        _emit(args, [{"n": args.n, "filter": args.filter or "", "objective": rec.objective,
                      "direction": rec.direction, "best": rec.best, "count": rec.count, "visited": rec.visited,
                      "graphs": rec.graphs}])
        return 0
    jobs = [(args.n, filt, s, None, None) for s in _shards(args)]
    lines = [ln for part in _map(args, _enum_job, jobs) for ln in part]
    out = open(args.out_file, "w", encoding="ascii") if args.out_file else sys.stdout
    try:
        if args.emit:
            for ln in lines:
                out.write(ln + "\n")
        else:
            out.write(json.dumps({"n": args.n, "filter": args.filter or "", "count": len(lines)}) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# orient

def _orient_job(job):
    g, shard = job
    return enumerate_orientations(g, shard=shard)


def cmd_orient(args) -> int:
    reports = [r for r in args.report.split(",") if r]
    rows = []
    for g in read_graph6_lines(_read_text(args.source)):
        row: dict = {"graph6": graph6_encode(g), "n": g.n, "m": g.m, "mode": args.mode}
        if args.mode == "exhaustive":
            parts = _map(args, _orient_job, [(g, s) for s in _shards(args)])
            agg: OrientationAggregate = parts[0]
            for p in parts[1:]:
                agg = agg.merge(p)
            row["visited"] = agg.all.count
            for name, ext in (("all", agg.all), ("acyclic", agg.acyclic), ("strong", agg.strong)):
                if "max" in reports:
                    row[f"{name}_max"] = ext.max
                if "min" in reports:
                    row[f"{name}_min"] = ext.min
                if "argset" in reports:
                    row[f"{name}_argmax"] = ext.argmax
                    row[f"{name}_argmin"] = ext.argmin
            if "argset" in reports and agg.all.argmax:
                row["argmax_djson"] = json.loads(write_djson(orient(g, agg.all.argmax[0])))
        else:
            sw = coloring_sweep(g, args.k)
            row.update(k=sw.k, chromatic=sw.chromatic, colorings=sw.colorings, distinct=sw.distinct)
            if "min" in reports:
                row["min"] = sw.min
            if "max" in reports:
                row["max"] = sw.max
            if "argset" in reports:
                row["argmin"] = sw.argmin
        rows.append(row)
    _emit(args, rows)
    return 0


# signed

def cmd_signed(args) -> int:
    text = _read_text(args.source)
    is_json = text.lstrip().startswith("{")
    row: dict = {"mode": args.mode}
    if args.mode == "wiener":
        s = read_sjson(text)
        row.update(n=s.base.n, signed_wiener=signed_wiener(s))
    elif args.mode == "minimize":
        g = read_sjson(text).base if is_json else graph6_decode(text.strip().splitlines()[0])
        shard = Shard.parse(args.shards) if args.shards else None
        res = min_signed_wiener(g, shard=shard)
        row.update(graph6=graph6_encode(g), value=res.value, argmin=res.argmin, visited=res.visited)
    else:
        if is_json:
            rep = canceling_report(read_sjson(text), args.k)
            row.update(k=args.k, verdict=rep.verdict, failures=[list(f) for f in rep.failures],
                       undefined=[list(u) for u in rep.undefined])
        else:
            g = graph6_decode(text.strip().splitlines()[0])
            shard = Shard.parse(args.shards) if args.shards else None
            found = exists_k_canceling(g, args.k, shard=shard)
            row.update(graph6=graph6_encode(g), k=args.k, exists=found is not None,
                       signs=list(found.signs) if found is not None else None)
    _emit(args, [row])
    return 0


# soltes / alpha

def cmd_soltes(args) -> int:
    rows = []
    for g in read_graph6_lines(_read_text(args.source)):
        prof = soltes_profile(g)
        rows.append({"graph6": graph6_encode(g), "n": g.n, "wiener": prof.wiener, "deltas": list(prof.deltas),
                     "soltes_vertices": sorted(prof.soltes_vertices), "proportion": str(prof.proportion),
                     "soltes_graph": prof.is_soltes_graph, "cut_vertices_undefined": True})
    _emit(args, rows)
    return 0


def cmd_alpha(args) -> int:
    lo, hi, steps = args.scan.split(",")
    rows = []
    for g in read_graph6_lines(_read_text(args.source)):
        scan = critical_exponents(g, float(lo), float(hi), int(steps))
        rows.append({"graph6": graph6_encode(g), "sign_changes": scan.count,
                     "brackets": [list(b) for b in scan.brackets], "roots": scan.roots()})
    _emit(args, rows)
    return 0


# verify

def _verify_job(job):
    cid, conv, params = job
    return claims.run_claim(cid, conv, **params)


def cmd_verify(args) -> int:
    target = args.claim
    if target != "all" and target not in claims.REGISTRY:
        print(f"unknown claim {target!r}; registered claims:", file=sys.stderr)
        for line in claims.registry_listing():
            print("  " + line, file=sys.stderr)
        return 2
    conv = claims.Conventions.from_env(tau_self=args.tau_convention == "self", seed=args.seed)
    ids = list(claims.REGISTRY) if target == "all" else [target]
    params = {"n": args.n} if args.n is not None and target == "ladder-wmax" else {}
    results = _map(args, _verify_job, [(cid, conv, params if cid == target else {}) for cid in ids])
    if args.json or args.out == "json":
        rows = [r.payload() | {"runtime": r.runtime} for r in results]
        out = io.StringIO()
        _emit(args, rows, out)
        text = out.getvalue()
        if args.out_file:
            with open(args.out_file, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(args, [{"claim": r.claim_id, "kind": r.kind, "status": r.status, "runtime": r.runtime,
                      "counterexample": r.counterexample} for r in results])
    for r in results:
        print(f"{r.status.upper():15s} {r.claim_id} ({r.kind}, {r.runtime:.1f}s)", file=sys.stderr)
    return 1 if any(r.failed for r in results) else 0


def _common(suppress: bool) -> argparse.ArgumentParser:
    """Global flags; subcommand copies use SUPPRESS so they never overwrite
    values given before the subcommand name."""
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shards", metavar="i/N", default=d(None), help="run only shard i of N")
    common.add_argument("--tau-convention", choices=("self", "noself"), default=d("self"),
                        help="whether τ counts the pair (x, x); default self")
    common.add_argument("--seed", type=int, default=d(0), help="seed for randomised checks")
    common.add_argument("--out", choices=("json", "csv"), default=d("json"))
    common.add_argument("--out-file", default=d(None), help="write the report here instead of stdout")
    common.add_argument("--threads", type=int, default=d(1), help="local worker processes")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    p = argparse.ArgumentParser(prog="wienerkit", description=__doc__.splitlines()[0], parents=[_common(False)])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariant", parents=[common], help="invariants of graph6 graphs")
    s.add_argument("source", help="graph6 file or - for stdin")
    s.add_argument("--which", default="w,sz,dim,ecc,blocks", help=f"subset of {','.join(INVARIANTS)}")
    s.set_defaults(fn=cmd_invariant)

    s = sub.add_parser("enumerate", parents=[common], help="generate a graph class")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--filter", default="", help="e.g. chemical,diameter=4 (see parse_filter)")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--emit", action="store_true", help="print canonical graph6 lines")
    mode.add_argument("--extremal", nargs=2, metavar=("OBJ", "DIR"), help=f"OBJ in {','.join(OBJECTIVES)}; "
                      "DIR min|max")
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("orient", parents=[common], help="orientation search on graph6 graphs")
    s.add_argument("source")
    s.add_argument("--mode", choices=("exhaustive", "coloring"), default="exhaustive")
    s.add_argument("--report", default="max,min", help="comma list of max,min,argset")
    s.add_argument("--k", type=int, help="colours for coloring mode (default χ)")
    s.set_defaults(fn=cmd_orient)

    s = sub.add_parser("signed", parents=[common], help="signed Wiener computations")
    s.add_argument("source", help="sjson object, or graph6 for minimize/canceling search")
    s.add_argument("--mode", choices=("wiener", "minimize", "canceling"), default="wiener")
    s.add_argument("--k", type=int, default=1)
    s.set_defaults(fn=cmd_signed)

    s = sub.add_parser("soltes", parents=[common], help="Δ_v profile of graph6 graphs")
    s.add_argument("source")
    s.set_defaults(fn=cmd_soltes)

    s = sub.add_parser("alpha", parents=[common], help="sign changes of Sz^α - W^α")
    s.add_argument("source")
    s.add_argument("--scan", default="0,4,4096", help="lo,hi,steps")
    s.set_defaults(fn=cmd_alpha)

    s = sub.add_parser("verify", parents=[common], help="run registered claims")
    s.add_argument("claim", help="claim id or 'all'")
    s.add_argument("--json", action="store_true", help="full JSON payloads")
    s.add_argument("--n", type=int, help="parameter for ladder-wmax")
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
