"""Command line interface.

Subcommands: gen, derive, check, color, aop, repro.  Graphs travel as JSON
files in the canonical schema; ``--dot`` writes DOT.  Exit codes: 0 success,
1 refuted (aop), 2 timeout (aop), 64 usage or bad input, 65 size cap,
70 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import aop, coloring, constructors, invariants, repro
from .core import (
    AcyclicDigraph,
    EdgeDir,
    GraphError,
    InternalInvariantError,
    Orientation,
    SizeCapExceeded,
    UndirectedGraph,
    graph_from_json,
    to_dot,
    to_json,
    underlying,
)

EX_USAGE = 64
EX_SIZECAP = 65
EX_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with 2
        self.print_usage(sys.stderr)
        raise SystemExit(EX_USAGE)


def _read_graph(path: str) -> UndirectedGraph | AcyclicDigraph:
    return graph_from_json(Path(path).read_text())


def _read_undirected(path: str) -> UndirectedGraph:
    g = _read_graph(path)
    if isinstance(g, AcyclicDigraph):
        raise GraphError(f"{path}: expected an undirected graph")
    return g


def _read_digraph(path: str) -> AcyclicDigraph:
    g = _read_graph(path)
    if not isinstance(g, AcyclicDigraph):
        raise GraphError(f"{path}: expected a directed graph")
    return g


def _read_orientation(path: str, base: UndirectedGraph) -> Orientation:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or "edges" not in obj:
        raise GraphError(f"{path}: orientation JSON needs an 'edges' key")
    edge_index = {e: i for i, e in enumerate(base.edges)}
    dirs = [EdgeDir.UNSET] * len(base.edges)
    for pair in obj["edges"]:
        u, v = pair
        key = (min(u, v), max(u, v))
        if key not in edge_index:
            raise GraphError(f"oriented pair ({u}, {v}) is not an edge of the graph")
        i = edge_index[key]
        if dirs[i] is not EdgeDir.UNSET:
            raise GraphError(f"edge {key} oriented twice")
        dirs[i] = EdgeDir.FORWARD if (u, v) == key else EdgeDir.BACKWARD
    return Orientation(base, tuple(dirs))


def _emit(args, g: UndirectedGraph | AcyclicDigraph) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(to_json(g) + "\n")
    if getattr(args, "dot", None):
        Path(args.dot).write_text(to_dot(g))
    directed = isinstance(g, AcyclicDigraph)
    m = len(g.arcs) if directed else len(g.edges)
    kind = "digraph" if directed else "graph"
    print(f"{kind}: {g.n} vertices, {m} {'arcs' if directed else 'edges'}")


def _fmt(x) -> str:
    return "inf" if x is math.inf else str(x)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="shiftgraphs", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="generate a graph family member")
    gsub = gen.add_subparsers(dest="family", required=True)
    for name in ("tournament", "shift", "zykov", "gadget", "girth5"):
        gp = gsub.add_parser(name)
        gp.add_argument("-o", "--out", help="write graph JSON here")
        gp.add_argument("--dot", help="write DOT here")
        if name == "tournament":
            gp.add_argument("--n", type=int, required=True)
        elif name == "shift":
            gp.add_argument("--n", type=int, required=True)
            gp.add_argument("--k", type=int, default=2)
        elif name == "zykov":
            gp.add_argument("--n", type=int, required=True)
            gp.add_argument("--orient-out", help="write the one-path orientation JSON here")
        elif name == "gadget":
            gp.add_argument("--g", type=int, required=True)
        else:
            gp.add_argument("--seed-in", help="alternative girth-5 seed graph JSON")

    der = sub.add_parser("derive", help="derive a graph from another")
    dsub = der.add_subparsers(dest="op", required=True)
    dl = dsub.add_parser("line")
    dl.add_argument("--in", dest="infile", required=True)
    dl.add_argument("-o", "--out")
    dl.add_argument("--dot")
    di = dsub.add_parser("iterate")
    di.add_argument("--in", dest="infile", required=True)
    di.add_argument("--times", type=int, required=True)
    di.add_argument("--cap", type=int, default=constructors.DEFAULT_SIZE_CAP)
    di.add_argument("-o", "--out")
    di.add_argument("--dot")

    chk = sub.add_parser("check", help="report structural invariants")
    chk.add_argument("--in", dest="infile", required=True)
    chk.add_argument("--json", action="store_true")
    chk.add_argument("--chi-cap", type=int, default=100)

    col = sub.add_parser("color", help="constructive colorings")
    csub = col.add_subparsers(dest="mode", required=True)
    cl = csub.add_parser("log")
    cl.add_argument("--in", dest="infile", required=True, help="acyclic digraph JSON")
    cl.add_argument("-o", "--out", help="write the line coloring JSON here")
    ck = csub.add_parser("kabfree")
    ck.add_argument("--in", dest="infile", required=True, help="tournament subdigraph JSON")
    ck.add_argument("--a", type=int, required=True)
    ck.add_argument("--b", type=int, required=True)
    ck.add_argument("--json", action="store_true")
    cg = csub.add_parser("gallai-roy")
    cg.add_argument("direction", choices=("to-orient", "to-color"))
    cg.add_argument("--in", dest="infile", required=True)
    cg.add_argument("--orient", help="orientation JSON (to-color)")
    cg.add_argument("-o", "--out")

    ap = sub.add_parser("aop", help="one-path orientation checks")
    asub = ap.add_subparsers(dest="mode", required=True)
    av = asub.add_parser("verify")
    av.add_argument("--in", dest="infile", required=True)
    av.add_argument("--orient", required=True)
    ad = asub.add_parser("decide")
    ad.add_argument("--in", dest="infile", required=True)
    ad.add_argument("--budget", type=int, default=aop.DEFAULT_NODE_BUDGET)
    ad.add_argument("--threads", type=int, default=1)
    ad.add_argument("--orient-out", help="write a found orientation here")

    rp = sub.add_parser("repro", help="run a reproduction recipe")
    rp.add_argument("name", choices=sorted(repro.RECIPES))
    rp.add_argument("--n", type=int)
    rp.add_argument("--a", type=int)
    rp.add_argument("--b", type=int)
    rp.add_argument("--g", type=int)
    rp.add_argument("--budget", type=int)
    return p


def _orientation_json(o: Orientation) -> str:
    return json.dumps({"edges": [list(arc) for arc in o.arcs()]})


def _cmd_gen(args) -> int:
    if args.family == "tournament":
        _emit(args, constructors.acyclic_tournament(args.n))
    elif args.family == "shift":
        _emit(args, constructors.shift_graph(args.n, args.k))
    elif args.family == "zykov":
        g, o = constructors.zykov(args.n)
        _emit(args, g)
        if args.orient_out:
            Path(args.orient_out).write_text(_orientation_json(o) + "\n")
    elif args.family == "gadget":
        _emit(args, constructors.odd_girth_gadget(args.g))
    else:
        seed = _read_undirected(args.seed_in) if args.seed_in else None
        _emit(args, constructors.girth5_non_aop(seed))
    return 0


def _cmd_derive(args) -> int:
    d = _read_digraph(args.infile)
    if args.op == "line":
        line, _ = constructors.line_digraph(d)
        _emit(args, line)
    else:
        _emit(args, constructors.iterate_line_digraph(d, args.times, args.cap))
    return 0


def _cmd_check(args) -> int:
    g = _read_graph(args.infile)
    und = underlying(g) if isinstance(g, AcyclicDigraph) else g
    report: dict[str, object] = {
        "n": und.n,
        "edges": len(und.edges),
        "girth": invariants.girth(und),
        "odd_girth": invariants.odd_girth(und),
        "omega": invariants.clique_number(und),
        "degeneracy": invariants.degeneracy(und).degeneracy,
    }
    report["triangle_free"] = report["omega"] <= 2
    if und.n <= args.chi_cap:
        chi, _ = invariants.chromatic_number(und, cap=args.chi_cap)
        report["chi"] = chi
    if args.json:
        printable = {
            k: ("inf" if v is math.inf else v) for k, v in report.items()
        }
        print(json.dumps(printable))
    else:
        for k, v in report.items():
            print(f"{k}: {_fmt(v) if not isinstance(v, bool) else str(v).lower()}")
    return 0


def _cmd_color(args) -> int:
    if args.mode == "log":
        d = _read_digraph(args.infile)
        base = repro.exact_coloring(underlying(d))
        col = coloring.log_color_line_digraph(d, base)
        payload = {
            "palette": col.palette,
            "colors": {str(v): c for v, c in enumerate(col.color)},
        }
        if args.out:
            Path(args.out).write_text(json.dumps(payload) + "\n")
        print(f"base colors: {base.used}, line palette: {col.palette}")
        return 0
    if args.mode == "kabfree":
        d = _read_digraph(args.infile)
        col, rep = coloring.color_kab_free(d, args.a, args.b)
        if args.json:
            print(
                json.dumps(
                    {
                        "left_size": rep.left_size,
                        "right_size": rep.right_size,
                        "left_colors": rep.left_colors,
                        "right_colors": rep.right_colors,
                        "k_star": rep.k_star,
                        "palette": rep.palette,
                        "witness": (
                            None
                            if rep.witness is None
                            else {
                                "left": list(rep.witness.left),
                                "right": list(rep.witness.right),
                            }
                        ),
                    }
                )
            )
        else:
            print(
                f"low side {rep.left_size} vertices / {rep.left_colors} colors, "
                f"high side {rep.right_size} / {rep.right_colors}, "
                f"final palette {rep.palette} (k* {rep.k_star})"
            )
            if rep.witness is not None:
                print(
                    f"complete bipartite witness: left {list(rep.witness.left)}, "
                    f"right {list(rep.witness.right)}"
                )
        return 0
    # gallai-roy
    g = _read_undirected(args.infile)
    if args.direction == "to-orient":
        base = repro.exact_coloring(g)
        o = coloring.coloring_to_orientation(g, base)
        text = _orientation_json(o)
        if args.out:
            Path(args.out).write_text(text + "\n")
        print(f"{base.palette}-coloring oriented; longest path < {base.palette} edges")
    else:
        if not args.orient:
            raise GraphError("to-color requires --orient")
        o = _read_orientation(args.orient, g)
        c = coloring.orientation_to_coloring(o)
        payload = {
            "palette": c.palette,
            "colors": {str(v): col for v, col in enumerate(c.color)},
        }
        if args.out:
            Path(args.out).write_text(json.dumps(payload) + "\n")
        print(f"longest-path coloring with palette {c.palette}")
    return 0


def _cmd_aop(args) -> int:
    g = _read_undirected(args.infile)
    if args.mode == "verify":
        o = _read_orientation(args.orient, g)
        res = aop.verify_aop(o)
        if res.ok:
            print("verified: acyclic, at most one directed path per pair")
            return 0
        if res.cycle is not None:
            print(f"refuted: directed cycle {list(res.cycle)}")
        else:
            print(f"refuted: pair {res.pair} has two directed paths {res.paths}")
        return 1
    verdict = aop.decide_aop(g, max_nodes=args.budget, threads=args.threads)
    s = verdict.stats
    print(
        f"{verdict.status}: {s.nodes} nodes, {s.prunes_cycle} cycle prunes, "
        f"{s.prunes_double_path} double-path prunes, {s.seconds:.2f}s"
    )
    if verdict.status == "has_aop":
        if args.orient_out and verdict.witness is not None:
            Path(args.orient_out).write_text(_orientation_json(verdict.witness) + "\n")
        return 0
    return 1 if verdict.status == "no_aop" else 2


def _cmd_repro(args) -> int:
    kwargs = {}
    fn = repro.RECIPES[args.name]
    if args.name == "kab":
        if args.n is not None:
            kwargs["n"] = args.n
        if args.a is not None:
            kwargs["a"] = args.a
        if args.b is not None:
            kwargs["b"] = args.b
    elif args.name == "zykov-aop":
        if args.n is not None:
            kwargs["n"] = args.n
        if args.g is not None:
            kwargs["g"] = args.g
    elif args.name in ("gadget", "g92-aop") and args.budget is not None:
        kwargs["budget"] = args.budget
    results = fn(**kwargs)
    ok = True
    for name, passed, detail in results:
        ok &= passed
        print(f"[{'PASS' if passed else 'FAIL'}] {name} ({detail})")
    return 0 if ok else 1


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cmd == "gen":
            return _cmd_gen(args)
        if args.cmd == "derive":
            return _cmd_derive(args)
        if args.cmd == "check":
            return _cmd_check(args)
        if args.cmd == "color":
            return _cmd_color(args)
        if args.cmd == "aop":
            return _cmd_aop(args)
        return _cmd_repro(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_SIZECAP
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EX_INTERNAL
    except (GraphError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
