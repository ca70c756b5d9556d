"""Command-line front end: ``updom <command> ...``, JSON on standard output.

Exit codes: 0 success, 2 refused input (malformed file, size cap, unmet
precondition), 1 internal invariant breach or failed sweep.
"""

from __future__ import annotations

import argparse
import inspect
import json
import random
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .constructions import (
    certify_gadget_identity,
    certify_q_identity,
    gadget_construct,
    h_graph,
    q_construct,
    subdivide,
    tripod,
)
from .dichotomy import classify_monogenic
from .domination import brute_cap, brute_Gamma, invariant_report
from .formats import FormatError, parse_graph, read_graph, to_graph6
from .graph import Graph, GraphError, clique_bipartition, girth, max_degree
from .recognition import find_nice_partition, forbidden_witness, in_class_S, in_Z_k, is_2k2_free
from .sweeps import SUITES
from .twok2 import upper_dominating_2k2


def _jsonable(x: Any) -> Any:
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return x


def _load(source: str) -> Graph:
    if source == "-":
        return parse_graph(sys.stdin.buffer.read())
    if not Path(source).exists():
        raise GraphError(f"no such file: {source}")
    return read_graph(source)


def _graph_record(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "m": g.m, "graph6": to_graph6(g)}


def cmd_solve(args) -> dict[str, Any]:
    g = _load(args.graph)
    method = args.method
    if method == "auto":
        method = "2k2" if is_2k2_free(g)[0] else "brute"
    if method == "2k2":
        out = upper_dominating_2k2(g)
        return {"size": out.size, "witness": out.witness, "method": out.method}
    size, witness = brute_Gamma(g)
    return {"size": size, "witness": witness, "method": "brute", "cap": brute_cap()}


def cmd_invariants(args) -> dict[str, Any]:
    g = _load(args.graph)
    rep = invariant_report(g)
    return {
        "n": g.n,
        "m": g.m,
        "alpha": rep.alpha,
        "gamma": rep.gamma_lower,
        "Gamma": rep.gamma_upper,
        "girth": girth(g),
        "max_degree": max_degree(g),
        "witnesses": rep.witnesses,
        "cap": brute_cap(),
    }


def cmd_construct(args) -> dict[str, Any]:
    kind = args.kind
    extra: dict[str, Any] = {}
    if kind == "tripod":
        if len(args.params) != 3:
            raise GraphError("construct tripod needs three leg lengths: i j l")
        i, j, l = (int(x) for x in args.params)
        out = tripod(i, j, l)
    elif kind == "hgraph":
        if len(args.params) != 1:
            raise GraphError("construct hgraph needs one argument: n")
        out = h_graph(int(args.params[0]), args.convention)
        extra["convention"] = args.convention
    else:
        if len(args.params) != 1:
            raise GraphError(f"construct {kind} needs one input graph file")
        g = _load(args.params[0])
        if kind == "subdivide":
            out, edge_of = subdivide(g)
            extra["edge_of"] = {x: list(e) for x, e in edge_of.items()}
        elif kind == "q":
            qg = q_construct(g)
            out = qg.graph
            extra.update(old=qg.old, new=qg.new, edge_of={x: list(e) for x, e in qg.edge_of.items()})
        else:
            gg = gadget_construct(g)
            out = gg.graph
            extra["gadget_map"] = {f"{u}-{v}": list(q) for (u, v), q in gg.gadget_map.items()}
    if args.output:
        Path(args.output).write_text(to_graph6(out) + "\n")
    return {"construction": kind, **_graph_record(out), **extra}


def cmd_certify(args) -> dict[str, Any]:
    g = _load(args.graph)
    cert = certify_q_identity(g) if args.kind == "q" else certify_gadget_identity(g)
    return {**cert.to_dict(), "cap": brute_cap()}


def cmd_recognize(args) -> dict[str, Any]:
    g = _load(args.graph)
    prop = args.property
    if prop == "2k2-free":
        ok, emb = is_2k2_free(g)
        return {"property": prop, "holds": ok, "witness": emb}
    if prop == "co-bipartite":
        parts = clique_bipartition(g)
        return {"property": prop, "holds": parts is not None, "cliques": parts}
    if prop == "qstar":
        p = find_nice_partition(g)
        out = {"property": prop, "holds": p is not None}
        if p is not None:
            out["partition"] = {"U": p.u, "W": p.w}
        else:
            name, emb = forbidden_witness(g)
            out["forbidden"] = {"graph": name, "embedding": emb}
        return out
    if prop == "tripod-forest":
        ok, legs = in_class_S(g)
        return {"property": prop, "holds": ok, "components": legs}
    if args.k is None:
        raise GraphError("recognize zk needs --k")
    return {"property": prop, "k": args.k, "convention": args.convention,
            "holds": in_Z_k(g, args.k, args.convention)}


def cmd_classify(args) -> dict[str, Any]:
    return classify_monogenic(_load(args.graph)).to_dict()


def cmd_sweep(args) -> dict[str, Any]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        fn = SUITES[name]
        params = inspect.signature(fn.__wrapped__).parameters
        kwargs = {}
        if "seed" in params:
            kwargs["seed"] = args.seed
        if args.max_n is not None and "max_n" in params:
            kwargs["max_n"] = args.max_n
        results.append(fn(**kwargs).to_dict())
    return {"seed": args.seed, "cap": brute_cap(), "all_passed": all(r["passed"] for r in results),
            "suites": results}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="updom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"updom {__version__}")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")
    parser.add_argument("--pretty", action="store_true", help="indented human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="upper dominating set")
    p.add_argument("graph", help="graph6 (.g6) or edge-list file, '-' for stdin")
    p.add_argument("--method", choices=["auto", "brute", "2k2"], default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("invariants", help="alpha, gamma, Gamma, girth, max degree")
    p.add_argument("graph")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("construct", help="build a reduction graph or a boundary-family graph")
    p.add_argument("kind", choices=["gadget", "q", "subdivide", "tripod", "hgraph"])
    p.add_argument("params", nargs="*", help="input graph file, or tripod legs i j l, or hgraph n")
    p.add_argument("-o", "--output", help="also write the result as graph6 to this file")
    p.add_argument("--convention", choices=["vertices", "edges"], default="vertices")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="brute-force certificate of a reduction identity")
    p.add_argument("kind", choices=["q", "gadget"])
    p.add_argument("graph")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("recognize", help="hereditary class membership")
    p.add_argument("property", choices=["2k2-free", "co-bipartite", "qstar", "tripod-forest", "zk"])
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--convention", choices=["vertices", "edges"], default="vertices")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("classify", help="complexity on H-free graphs")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="run acceptance sweeps")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.set_defaults(func=cmd_sweep)
    return parser


def _render(payload: Any, pretty: bool) -> str:
    payload = _jsonable(payload)
    if pretty:
        return json.dumps(payload, indent=2)
    return json.dumps(payload, separators=(",", ":"))


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    random.seed(args.seed)
    try:
        payload = args.func(args)
    except FormatError as exc:
        print(_render({"error": str(exc), "offset": exc.offset}, args.pretty))
        return 2
    except GraphError as exc:
        print(_render({"error": str(exc)}, args.pretty))
        return 2
    except (RuntimeError, AssertionError) as exc:
        print(_render({"error": f"internal invariant breach: {exc}"}, args.pretty))
        return 1
    print(_render(payload, args.pretty))
    if args.command == "certify" and payload["identity"] == "fails":
        return 1
    if args.command == "sweep" and not payload["all_passed"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
