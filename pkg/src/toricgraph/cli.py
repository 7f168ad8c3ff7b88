"""Command-line interface.

Exit codes: 0 success or true, 1 false, 2 usage or input error,
3 internal disagreement (routes, or structural sets against the oracle).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

from .bases import DEFAULT_MAX_EDGES, BasisElement, EngineBoundError, circuits, graver, indispensables, \
    universal_groebner
from .enumeration import SUPPORT_MODES, enumerate_robust_atlas
from .graph import Graph, GraphError, ParseError, parse_graph
from .oracle import OracleError, circuits_oracle, graver_oracle, mu_and_indispensables_oracle, ugb_oracle
from .robustness import ROUTES, RouteDisagreement, robustness_report, subdivide_edge
from .walks import Binomial

__all__ = ["CommandResult", "run", "main", "graph_to_dot", "emit_basis"]

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

SET_TITLES = {
    "circuits": "Circuits",
    "graver": "Graver basis",
    "ugb": "Universal Groebner basis",
    "indispensable": "Indispensable binomials",
}


@dataclass(frozen=True)
class CommandResult:
    code: int
    output: str = ""
    error: str = ""


class _InputError(Exception):
    pass


# -- emitters -----------------------------------------------------------------------

def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v + 1};" for v in range(g.n)]
    lines += [f'  {u + 1} -- {v + 1} [label="{s}"];' for (u, v), s in zip(g.edges, g.names)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _walk_dot(g: Graph, el: BasisElement, name: str) -> str:
    """The graph with the witness walk's plus edges red and minus edges blue;
    edges walked twice are drawn thick, unused ones dashed grey."""
    b = el.binomial
    lines = [f"graph {name} {{", f'  label="{name}: {b.text(g.names)}";']
    lines += [f"  {v + 1};" for v in range(g.n)]
    for e, ((u, v), s) in enumerate(zip(g.edges, g.names)):
        if b.plus[e]:
            style = f'color=red, penwidth={b.plus[e]}'
        elif b.minus[e]:
            style = f'color=blue, penwidth={b.minus[e]}'
        else:
            style = "color=grey, style=dashed"
        lines.append(f'  {u + 1} -- {v + 1} [label="{s}", {style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _element_json(g: Graph, el: BasisElement, label: str) -> dict:
    return {
        "label": label,
        "binomial": el.binomial.text(g.names),
        "plus": list(el.binomial.plus),
        "minus": list(el.binomial.minus),
        "degree": el.binomial.degree,
        "walk": [g.names[e] for e in el.walk.edges],
        "tags": list(el.tags),
    }


def emit_basis(g: Graph, kind: str, elems: Sequence[BasisElement], emit: str) -> str:
    """Render one of the four binomial sets; elements must already be sorted."""
    title = SET_TITLES[kind]
    labels = [f"B{i}" for i in range(1, len(elems) + 1)]
    if emit == "json":
        return _dump({"set": kind, "graph": g.to_json(), "count": len(elems),
                      "elements": [_element_json(g, el, lab) for el, lab in zip(elems, labels)]})
    if emit == "dot":
        return "".join(_walk_dot(g, el, lab) for el, lab in zip(elems, labels)) or graph_to_dot(g)
    if not elems:
        return f"{title}: (empty)" + ("; I_G = 0" if kind == "graver" else "") + "\n"
    out = [f"{title}: {len(elems)} element{'s' if len(elems) != 1 else ''}"]
    for el, lab in zip(elems, labels):
        out.append(f"{lab} = {el.binomial.text(g.names)}  [{', '.join(el.tags)}]  walk {el.walk.text(g)}")
    return "\n".join(out) + "\n"


def _robust_text(rep) -> str:
    out = []
    for name, c in rep.conditions.items():
        line = f"{name}: {'holds' if c.holds else 'fails'}"
        if c.witness:
            line += "  " + json.dumps(c.witness, separators=(",", ":"))
        out.append(line)
    for route, verdict in rep.routes.items():
        out.append(f"route {route}: {'robust' if verdict else 'not robust'}")
    out.append(f"verdict: {'robust' if rep.verdict else 'not robust'}")
    return "\n".join(out) + "\n"


# -- argument handling ---------------------------------------------------------------

def _read_graph(args, stdin: TextIO) -> Graph:
    if args.infile is None:
        raise _InputError("--in FILE is required (use '-' for standard input)")
    fmt = args.format
    if args.infile == "-":
        text = stdin.read()
        fmt = fmt or "edge-list"
    else:
        path = Path(args.infile)
        try:
            text = path.read_text()
        except OSError as exc:
            raise _InputError(f"cannot read {args.infile}: {exc.strerror}") from None
        if fmt is None:
            fmt = {".json": "json", ".dot": "dot", ".gv": "dot"}.get(path.suffix.lower(), "edge-list")
    return parse_graph(text, fmt)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricgraph", description="Toric ideals of graphs.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def graph_args(p, emit=True):
        p.add_argument("--in", dest="infile", metavar="FILE", help="graph file, '-' for stdin")
        p.add_argument("--format", choices=("edge-list", "dot", "json"),
                       help="input format (default: from the file extension)")
        if emit:
            p.add_argument("--emit", choices=("text", "json", "dot"), default="text")
        p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES, metavar="N")

    for kind in SET_TITLES:
        graph_args(sub.add_parser(kind, help=f"list the {SET_TITLES[kind].lower()}"))
    p = sub.add_parser("robust", help="decide robustness")
    graph_args(p)
    p.add_argument("--route", choices=ROUTES, default="circuits")
    graph_args(sub.add_parser("mu", help="minimal number of generators (brute force)"))
    p = sub.add_parser("verify", help="compare structural sets with the brute-force oracle")
    graph_args(p)
    p = sub.add_parser("subdivide", help="replace an edge by a path of three edges")
    graph_args(p)
    p.add_argument("--edge", required=True, help="edge name or 1-based index")
    p = sub.add_parser("atlas", help="robust graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="DIR", help="write one JSON and one DOT file per graph")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, metavar="N")
    p.add_argument("--support-mode", choices=SUPPORT_MODES, default="graver")
    p.add_argument("--emit", choices=("text", "json"), default="text")
    return parser


# -- commands ------------------------------------------------------------------------

def _cmd_set(args, g: Graph) -> CommandResult:
    fn = {"circuits": circuits, "graver": graver, "ugb": universal_groebner,
          "indispensable": indispensables}[args.command]
    return CommandResult(EXIT_OK, emit_basis(g, args.command, fn(g, args.max_edges), args.emit))


def _cmd_robust(args, g: Graph) -> CommandResult:
    rep = robustness_report(g, args.route, args.max_edges)
    if args.emit == "json":
        out = _dump(rep.to_json())
    elif args.emit == "dot":
        out = graph_to_dot(g)
    else:
        out = _robust_text(rep)
    return CommandResult(EXIT_OK if rep.verdict else EXIT_FALSE, out)


def _sorted_vectors(vecs) -> list[Binomial]:
    return sorted((Binomial.from_vector(u) for u in vecs), key=Binomial.sort_key)


def _cmd_mu(args, g: Graph) -> CommandResult:
    if g.m > args.max_edges:
        raise EngineBoundError(f"graph has {g.m} edges; the bound is {args.max_edges}")
    mu, indisp = mu_and_indispensables_oracle(g)
    gr = graver_oracle(g)
    bins = _sorted_vectors(indisp)
    if args.emit == "json":
        out = _dump({"mu": mu, "graver_size": len(gr),
                     "unique_minimal_generating_set": mu == len(indisp),
                     "indispensable": [b.text(g.names) for b in bins]})
    else:
        lines = [f"mu = {mu}", f"Graver basis size = {len(gr)}",
                 f"indispensable binomials: {len(bins)}"]
        lines += [f"  {b.text(g.names)}" for b in bins]
        if mu == len(indisp):
            lines.append("unique minimal generating set")
        out = "\n".join(lines) + "\n"
    return CommandResult(EXIT_OK, out)


def _cmd_verify(args, g: Graph) -> CommandResult:
    gr = graver(g, args.max_edges)
    structural = {
        "circuits": {el.binomial for el in circuits(g, args.max_edges)},
        "graver": {el.binomial for el in gr},
        "ugb": {el.binomial for el in gr if el.in_ugb},
        "indispensable": {el.binomial for el in gr if el.indispensable},
    }
    mu, indisp = mu_and_indispensables_oracle(g)
    oracle = {
        "circuits": set(_sorted_vectors(circuits_oracle(g))),
        "graver": set(_sorted_vectors(graver_oracle(g))),
        "ugb": set(_sorted_vectors(ugb_oracle(g))),
        "indispensable": set(_sorted_vectors(indisp)),
    }
    diff = {}
    for kind in structural:
        missing = sorted(oracle[kind] - structural[kind], key=Binomial.sort_key)
        extra = sorted(structural[kind] - oracle[kind], key=Binomial.sort_key)
        diff[kind] = {"missing": [b.text(g.names) for b in missing],
                      "extra": [b.text(g.names) for b in extra]}
    routes = {}
    try:
        routes = robustness_report(g, "all", args.max_edges).routes
        agree = True
    except RouteDisagreement as exc:
        routes, agree = exc.routes, False
    clean = agree and all(not d["missing"] and not d["extra"] for d in diff.values())
    if args.emit == "json":
        out = _dump({"diff": diff, "mu": mu, "routes": routes, "agree": clean})
    else:
        lines = []
        for kind, d in diff.items():
            status = "ok" if not d["missing"] and not d["extra"] else "MISMATCH"
            lines.append(f"{SET_TITLES[kind]}: {len(structural[kind])} structural, "
                         f"{len(oracle[kind])} oracle, {status}")
            lines += [f"  missing {s}" for s in d["missing"]]
            lines += [f"  extra {s}" for s in d["extra"]]
        lines.append("routes: " + ", ".join(f"{k}={'robust' if v else 'not robust'}"
                                           for k, v in routes.items()))
        lines.append("verify: ok" if clean else "verify: DISAGREEMENT")
        out = "\n".join(lines) + "\n"
    return CommandResult(EXIT_OK if clean else EXIT_INTERNAL, out)


def _cmd_subdivide(args, g: Graph) -> CommandResult:
    if args.edge in g.names:
        b = g.names.index(args.edge)
    elif args.edge.isdigit() and 1 <= int(args.edge) <= g.m:
        b = int(args.edge) - 1
    else:
        raise _InputError(f"no edge {args.edge!r} in the graph")
    h = subdivide_edge(g, b)
    if args.emit == "json":
        out = _dump(h.to_json())
    elif args.emit == "dot":
        out = graph_to_dot(h)
    else:
        out = h.to_edge_list()
    return CommandResult(EXIT_OK, out)


def _cmd_atlas(args) -> CommandResult:
    entries = enumerate_robust_atlas(args.n, jobs=max(1, args.jobs), support_mode=args.support_mode)
    classes: dict[int, list[int]] = {}
    for k, e in enumerate(entries, 1):
        classes.setdefault(e.ideal_class_id, []).append(k)
    lines = [f"{len(entries)} robust graphs on {args.n} vertices "
             f"({len(classes)} ideal classes, full support by {args.support_mode})"]
    for k, e in enumerate(entries, 1):
        lines.append(f"G{k:02d}  class {e.ideal_class_id}  edges {e.graph.m}  "
                     f"Graver {e.graver_size}  {e.graph!r}")
    for cid, members in sorted(classes.items()):
        lines.append(f"class {cid}: {len(members)} graph{'s' if len(members) != 1 else ''} "
                     + " ".join(f"G{k:02d}" for k in members))
    summary = "\n".join(lines) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k, e in enumerate(entries, 1):
            (out / f"G{k:02d}.json").write_text(_dump(e.to_json()))
            (out / f"G{k:02d}.dot").write_text(graph_to_dot(e.graph, f"G{k:02d}"))
        (out / "summary.txt").write_text(summary)
    if args.emit == "json":
        return CommandResult(EXIT_OK, _dump({"n": args.n, "count": len(entries),
                                             "entries": [e.to_json() for e in entries]}))
    return CommandResult(EXIT_OK, summary)


def run(argv: Sequence[str], stdin: TextIO | None = None) -> CommandResult:
    """Run one command and return its exit code and output without exiting."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return CommandResult(EXIT_INPUT if exc.code else EXIT_OK)
    try:
        if args.command == "atlas":
            return _cmd_atlas(args)
        g = _read_graph(args, stdin or sys.stdin)
        handler = {"robust": _cmd_robust, "mu": _cmd_mu, "verify": _cmd_verify,
                   "subdivide": _cmd_subdivide}.get(args.command, _cmd_set)
        return handler(args, g)
    except ParseError as exc:
        return CommandResult(EXIT_INPUT, error=f"error: {args.infile}: {exc}\n")
    except (_InputError, GraphError, EngineBoundError, OracleError, ValueError) as exc:
        return CommandResult(EXIT_INPUT, error=f"error: {exc}\n")
    except RouteDisagreement as exc:
        return CommandResult(EXIT_INTERNAL, error=f"internal error: {exc}\n")


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.output:
        sys.stdout.write(result.output)
    if result.error:
        sys.stderr.write(result.error)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
