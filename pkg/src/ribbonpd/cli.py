"""Command-line interface: ``ribbonpd <verb> ...``.

Output is JSON on stdout (``--pretty`` for an indented text rendering).
Exit status: 0 on success, 1 for domain errors, 2 for unreadable input.

PD codes follow the KnotAtlas convention: ``X(i,j,k,l)`` lists the four
strand labels counter-clockwise starting from the incoming under-strand,
so the 2nd and 4th labels form the over-strand.  Wherever a PD argument
is expected, a path to a ``.pd`` file or a diagram JSON file also works.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import decomp, linkdiag, oracle
from .errors import ParseError, RibbonError
from .ribbon import RibbonGraph, canonical_tuple, geometric_dual, genus, partial_dual


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    try:
        return path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {arg}: {exc.strerror}") from None


def _graph(arg: str) -> RibbonGraph:
    return RibbonGraph.from_json(_read_text(arg))


def _diagram(arg: str) -> linkdiag.LinkDiagram:
    text = _read_text(arg) if arg == "-" or Path(arg).is_file() else arg
    return linkdiag.read_diagram(text)


def _labels(subset) -> list[str]:
    return decomp.sort_labels(subset)


def _diagram_json(D: linkdiag.LinkDiagram) -> dict:
    out = D.to_json()
    out["pd"] = D.to_pd()
    return out


# -- verbs --------------------------------------------------------------


def cmd_genus(args):
    rep = genus(_graph(args.file))
    return {"components": list(rep.components), "total": rep.total}


def cmd_dual(args):
    return geometric_dual(_graph(args.file)).to_json()


def cmd_pdual(args):
    G = _graph(args.file)
    edges = [e for e in args.edges.split(",") if e] if args.edges else []
    return partial_dual(G, edges).to_json()


def cmd_biseparation(args):
    found = decomp.find_plane_biseparation(_graph(args.file))
    if found is None:
        return {"exists": False}
    return found[1].to_json()


def cmd_plane_duals(args):
    return [_labels(A) for A in decomp.enumerate_plane_subsets(_graph(args.file))]


def cmd_tait(args):
    return linkdiag.tait(_diagram(args.pd), args.coloring, args.convention).to_json()


def cmd_states(args):
    D = _diagram(args.pd)
    out, seen = [], set()
    for s in linkdiag.states(D):
        g = linkdiag.state_graph(D, s, args.convention)
        if args.dedupe:
            code = canonical_tuple(g, "achiral")
            if code in seen:
                continue
            seen.add(code)
        out.append({"state": s, "graph": g.to_json()})
    return out


def cmd_diagram_of(args):
    return _diagram_json(linkdiag.diagram_of(_graph(args.file), args.convention))


def cmd_diagrams_of(args):
    return [_diagram_json(D) for D in linkdiag.diagrams_of(_graph(args.file), args.convention)]


def cmd_same(args):
    same = linkdiag.same_link_diagram_set(_diagram(args.pd1), _diagram(args.pd2), args.convention)
    return {"same": same}


def cmd_flip(args):
    parts = [p.strip() for p in args.cut.split(",")]
    if len(parts) != 2 or not all(parts):
        raise ParseError("--cut needs two strand labels: s1,s2")
    return _diagram_json(linkdiag.summand_flip(_diagram(args.pd), tuple(parts)))


def cmd_verify(args):
    return oracle.verify(args.max_edges, args.max_vertices, args.manifest, args.seed, args.samples)


# -- plumbing -----------------------------------------------------------------


def _render(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for v in obj:
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
        return lines or [f"{pad}[]"]
    return [f"{pad}{json.dumps(obj)}"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="indented text instead of JSON")
    common.add_argument("--convention", choices=("standard", "flip"), default=argparse.SUPPRESS,
                        help="Tait-sign convention; 'flip' negates it (diagnostic)")

    p = argparse.ArgumentParser(prog="ribbonpd", parents=[common], description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, helptext, parent=sub):
        sp = parent.add_parser(name, parents=[common], help=helptext)
        sp.set_defaults(func=func)
        return sp

    verb("genus", cmd_genus, "per-component and total genus").add_argument("file")
    verb("dual", cmd_dual, "geometric dual").add_argument("file")
    sp = verb("pdual", cmd_pdual, "partial dual with respect to --edges")
    sp.add_argument("--edges", default="", help="comma-separated edge labels")
    sp.add_argument("file")
    verb("biseparation", cmd_biseparation, "plane-biseparation certificate").add_argument("file")
    verb("plane-duals", cmd_plane_duals, "all A with G^A plane").add_argument("file")

    link = sub.add_parser("link", parents=[common], help="link diagram commands")
    lsub = link.add_subparsers(dest="link_verb", required=True)
    sp = verb("tait", cmd_tait, "Tait graph of a diagram", lsub)
    sp.add_argument("pd")
    sp.add_argument("--coloring", type=int, choices=(0, 1), default=0)
    sp = verb("states", cmd_states, "state ribbon graphs", lsub)
    sp.add_argument("pd")
    sp.add_argument("--dedupe", action="store_true", help="one graph per isomorphism class")
    verb("diagram-of", cmd_diagram_of, "diagram of a signed plane graph", lsub).add_argument("file")
    verb("diagrams-of", cmd_diagrams_of, "diagrams of all plane partial duals", lsub).add_argument("file")
    sp = verb("same", cmd_same, "same set of ribbon graphs?", lsub)
    sp.add_argument("pd1")
    sp.add_argument("pd2")
    sp = verb("flip", cmd_flip, "summand flip across two strands", lsub)
    sp.add_argument("pd")
    sp.add_argument("--cut", required=True, help="two strand labels s1,s2")

    orc = sub.add_parser("oracle", parents=[common], help="brute-force agreement checks")
    osub = orc.add_subparsers(dest="oracle_verb", required=True)
    sp = verb("verify", cmd_verify, "exhaustive agreement suite", osub)
    sp.add_argument("--max-edges", type=int, default=4)
    sp.add_argument("--max-vertices", type=int, default=3)
    sp.add_argument("--samples", type=int, default=0)
    sp.add_argument("--seed", type=int, default=20240611)
    sp.add_argument("--manifest", default=None, help="write the report to this path")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.pretty = getattr(args, "pretty", False)
    args.convention = -1 if getattr(args, "convention", "standard") == "flip" else 1
    try:
        result = args.func(args)
    except ParseError as exc:
        err.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2
    except RibbonError as exc:
        err.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    if args.pretty:
        out.write("\n".join(_render(result)) + "\n")
    else:
        out.write(json.dumps(result) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
