"""Command-line front end: ``majicolor {color,verify,exact,gen,convert,probe}``.

Every command writes one JSON document per input graph (JSON lines) with a
``"schema"`` key. Exit status: 0 success, 1 verification failure or
infeasible, 2 usage or parse error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import construct
from .automorphism import automorphism_group
from .coloring import ArcColoring, EdgeColoring
from .errors import (BudgetExhausted, EnumerationExhausted, InfeasibleUpToKMax, MajicolorError,
                     MalformedInput, PreconditionError, VerifierRejected)
from .exact import exact_arc_index, exact_index, probe_conjecture
from .families import FamilySpec, KINDS, generate
from .formats import encode_graph6, parse_graph_stream, serialize_graph, to_dot
from .graph import Graph, complete_graph, symmetric_closure
from .verify import IndexKind, verify_kind, verify_majority

SCHEMA = "majicolor/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
ALGOS = ("auto", "two", "am4", "asym", "complete", "traceable", "k2n", "main", "digraph", "bip3")
MODES = ("strict", "weak", "almost", "m", "d", "md", "chi-d", "arc_majority",
         "arc_majority_distinguishing")
ARC_MODES = ("arc_majority", "arc_majority_distinguishing")


def dumps(doc: dict) -> str:
    return json.dumps({"schema": SCHEMA, **doc}, sort_keys=True)


def check(g: Graph, c, mode: str):
    """Verification report for ``c`` on ``g`` (arc modes use the symmetric closure)."""
    if mode in ("strict", "weak", "almost"):
        return verify_majority(g, c, mode)
    if mode in ARC_MODES:
        return verify_kind(symmetric_closure(g), c, mode)
    return verify_kind(g, c, mode)


def run_algo(g: Graph, algo: str, seed: int = 0, directed: bool = False):
    """(coloring, verification mode) for one constructive algorithm."""
    if algo == "auto":
        if g.n >= 3 and g.m == g.n * (g.n - 1) // 2:
            algo = "complete"
        elif g.n and g.min_degree >= 2:
            algo = "main"
        else:
            raise PreconditionError("auto needs a connected graph with minimum degree >= 2")
    if algo == "two":
        return construct.two_coloring_balanced(g, seed=seed).coloring, "weak"
    if algo == "am4":
        return construct.almost_majority_4(g, seed=seed), "almost"
    if algo == "asym":
        return construct.color_via_asymmetric_subgraph(g, seed=seed), "md"
    if algo == "complete":
        if g != complete_graph(g.n):
            raise PreconditionError("input is not a complete graph")
        return construct.color_complete(g.n, seed=seed), "md"
    if algo == "traceable":
        return construct.color_traceable_mindeg4(g, seed=seed), "md"
    if algo == "k2n":
        return construct.color_k2n_graph(g), "md"
    if algo == "main":
        return construct.color_main(g, seed=seed), "md"
    if algo == "digraph":
        return construct.color_symmetric_digraph(symmetric_closure(g), seed=seed), \
            "arc_majority_distinguishing"
    if algo == "bip3":
        if directed:
            return construct.majority3_symmetric_digraph(symmetric_closure(g)), "arc_majority"
        return construct.majority3_bipartite(g), "strict"
    raise PreconditionError(f"unknown algorithm {algo!r}")


def _g6(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")


def _code(exc: BaseException) -> int:
    if isinstance(exc, BudgetExhausted):
        return EXIT_BUDGET
    if isinstance(exc, (VerifierRejected, EnumerationExhausted, InfeasibleUpToKMax)):
        return EXIT_FAIL
    return EXIT_USAGE


def _error_doc(exc: BaseException) -> dict:
    return {"status": "error", "error": type(exc).__name__, "message": str(exc)}


# per-graph workers (top level so they can run in worker processes) ----------------

def color_job(args):
    g, algo, seed, directed = args
    try:
        c, mode = run_algo(g, algo, seed, directed)
    except MajicolorError as exc:
        return {"algo": algo, "graph": _g6(g), **_error_doc(exc)}, _code(exc), None
    rep = check(g, c, mode)
    doc = {"algo": algo, "seed": seed, "graph": _g6(g), "n": g.n, "m": g.m,
           "directed": isinstance(c, ArcColoring), "target": mode,
           "coloring": c.to_json(), "palette": list(c.palette), "colors_used": c.colors_used,
           "verification_report": rep.to_json()}
    return doc, EXIT_OK if rep.passed else EXIT_FAIL, c


def exact_job(args):
    g, kind, kmax, budget, prune = args
    try:
        if kind in ARC_MODES:
            k, c = exact_arc_index(symmetric_closure(g), kind, kmax, budget, prune)
        else:
            k, c = exact_index(g, kind, kmax, budget, prune)
    except InfeasibleUpToKMax as exc:
        return {"kind": kind, "graph": _g6(g), "status": "infeasible", "k_max": kmax,
                "message": str(exc)}, EXIT_FAIL
    except BudgetExhausted as exc:
        return {"kind": kind, "graph": _g6(g), "status": "budget_exhausted", "message": str(exc)}, EXIT_BUDGET
    except MajicolorError as exc:
        return {"kind": kind, "graph": _g6(g), **_error_doc(exc)}, _code(exc)
    return {"kind": kind, "graph": _g6(g), "status": "ok", "k": k, "witness": c.to_json()}, EXIT_OK


def probe_job(args):
    g, budget, seed = args
    try:
        return {"graph": _g6(g), **probe_conjecture(g, budget, seed)}, EXIT_OK
    except BudgetExhausted as exc:
        return {"graph": _g6(g), "status": "budget_exhausted", "message": str(exc)}, EXIT_BUDGET


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# commands --------------------------------------------------------------------

def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _graphs(args) -> list[Graph]:
    return parse_graph_stream(_read(args.input), args.format)


def _indexed(path: str, i: int, total: int) -> Path:
    p = Path(path)
    return p if total == 1 else p.with_name(f"{p.stem}-{i}{p.suffix}")


def _side_outputs(args, g: Graph, c, i: int, total: int, title: str):
    directed = isinstance(c, ArcColoring)
    if args.dot:
        _indexed(args.dot, i, total).write_text(to_dot(g, c, directed))
    if args.figure:
        from .plotting import draw_coloring
        draw_coloring(g, c, _indexed(args.figure, i, total), title=title, directed=directed)


def cmd_color(args, out) -> int:
    graphs = _graphs(args)
    results = _map(color_job, [(g, args.algo, args.seed, args.directed) for g in graphs], args.jobs)
    status = EXIT_OK
    for i, (g, (doc, code, c)) in enumerate(zip(graphs, results)):
        print(dumps(doc), file=out)
        if c is not None:
            _side_outputs(args, g, c, i, len(graphs), f"{doc['algo']}: {c.colors_used} colors")
        if code != EXIT_OK:
            print(f"graph {i}: {doc.get('message', 'verification failed')}", file=sys.stderr)
        status = max(status, code)
    return status


def _load_coloring(data: dict, arcs: bool):
    data = data.get("coloring", data)
    return ArcColoring.from_json(data) if arcs else EdgeColoring.from_json(data)


def cmd_verify(args, out) -> int:
    raw = _read(args.input)
    items = []
    if raw.lstrip().startswith(b"{"):
        # output of the color command: graph and coloring travel together
        for line in raw.splitlines():
            if line.strip():
                doc = json.loads(line)
                if "coloring" not in doc:
                    raise MalformedInput("document has no coloring")
                mode = args.mode or doc.get("target", "md")
                g = parse_graph_stream(doc["graph"].encode(), "graph6")[0]
                items.append((g, _load_coloring(doc, mode in ARC_MODES), mode))
    else:
        if not args.coloring:
            raise MalformedInput("verify needs --coloring unless given color output")
        g = parse_graph_stream(raw, args.format)[0]
        mode = args.mode or "md"
        items.append((g, _load_coloring(json.loads(_read(args.coloring)), mode in ARC_MODES), mode))
    status = EXIT_OK
    for i, (g, c, mode) in enumerate(items):
        target = symmetric_closure(g) if mode in ARC_MODES else g
        c.check_total(target)
        rep = check(g, c, mode)
        print(dumps({"graph": _g6(g), "verification_report": rep.to_json()}), file=out)
        _side_outputs(args, g, c, i, len(items), f"{mode}: {rep.verdict}")
        if not rep.passed:
            print(f"graph {i}: {mode} check failed", file=sys.stderr)
            status = EXIT_FAIL
    return status


def cmd_exact(args, out) -> int:
    graphs = _graphs(args)
    kind = IndexKind(args.kind).value
    results = _map(exact_job, [(g, kind, args.kmax, args.budget, not args.no_prune) for g in graphs],
                   args.jobs)
    status = EXIT_OK
    for doc, code in results:
        print(dumps(doc), file=out)
        status = max(status, code)
    return status


def cmd_probe(args, out) -> int:
    graphs = _graphs(args)
    status = EXIT_OK
    for doc, code in _map(probe_job, [(g, args.budget, args.seed) for g in graphs], args.jobs):
        print(dumps(doc), file=out)
        status = max(status, code)
    return status


def cmd_gen(args, out) -> int:
    params = list(args.params or [])
    if args.n is not None:
        params.insert(0, args.n)
    g = generate(FamilySpec(args.family, params))
    out.write(serialize_graph(g, args.to).decode("ascii"))
    return EXIT_OK


def cmd_convert(args, out) -> int:
    for g in _graphs(args):
        if args.to == "dot":
            out.write(to_dot(g))
        elif args.to == "group":
            out.write(dumps({"graph": _g6(g), "group": automorphism_group(g).to_json()}) + "\n")
        else:
            out.write(serialize_graph(g, args.to).decode("ascii"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="majicolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def graph_input(sp):
        sp.add_argument("input", nargs="?", default="-", help="graph file (default: stdin)")
        sp.add_argument("--format", default="auto", choices=("auto", "graph6", "edge_list", "dimacs"))

    def side_outputs(sp):
        sp.add_argument("--dot", help="write DOT with edge colors to this path")
        sp.add_argument("--figure", help="write a matplotlib rendering to this path (e.g. out.png)")

    sp = sub.add_parser("color", help="construct a certified coloring")
    graph_input(sp)
    side_outputs(sp)
    sp.add_argument("--algo", default="auto", choices=ALGOS)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--directed", action="store_true",
                    help="with bip3: color the symmetric closure's arcs")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a coloring")
    graph_input(sp)
    side_outputs(sp)
    sp.add_argument("--coloring", help="JSON coloring ('u-v' or 'u>v' keys -> color)")
    sp.add_argument("--mode", choices=MODES)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("exact", help="exact index by backtracking")
    graph_input(sp)
    sp.add_argument("--kind", default="md", choices=[k.value for k in IndexKind])
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--no-prune", action="store_true", help="disable symmetry pruning")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("probe", help="test whether five colors suffice on one instance")
    graph_input(sp)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_probe)

    sp = sub.add_parser("gen", help="generate a family member")
    sp.add_argument("--family", required=True, choices=KINDS)
    sp.add_argument("--n", type=int)
    sp.add_argument("--params", type=int, nargs="*")
    sp.add_argument("--to", default="graph6", choices=("graph6", "edge_list", "dimacs"))
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("convert", help="re-encode graphs")
    graph_input(sp)
    sp.add_argument("--to", default="graph6", choices=("graph6", "edge_list", "dimacs", "dot", "group"))
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (MajicolorError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
