"""Command-line entry point: ``properconn <command> ...``.

Exit codes: 0 on success or a passing campaign, 1 when a campaign finds
violations or a colouring fails verification, 2 on input or budget errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import campaigns
from .classes import ChainSpec, ThresholdSpec, hamiltonian_path, max_weight_dominating_vertex
from .coloring import is_proper_path_coloring
from .constructions import (
    color_circular_arc,
    color_from_dominating,
    color_from_two_step_dominating,
    color_interval,
    color_traceable,
    color_tree,
)
from .domination import (
    KINDS,
    TWO_WAY,
    TWO_WAY_TWO_STEP,
    min_connected_two_way_dominating,
    min_connected_two_way_two_step_dominating,
)
from .errors import GraphError, ParseError, SearchBudgetExceeded
from .exact import DEFAULT_MAX_NODES, pc_exact
from .io import emit_dot, format_coloring, load_input, parse_coloring

FORMATS = ("auto", "graph6", "edge-list", "interval", "arc", "threshold", "chain")
METHODS = ("tree", "traceable", "two-step", "dominating", "interval", "circular-arc")


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(args):
    return load_input(_read(args.file), args.format)


def _vertex_list(text):
    if text is None:
        return None
    return [int(t) for t in text.replace(",", " ").split()]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(text)


def cmd_pc(args) -> int:
    g, _ = _load(args)
    res = pc_exact(g, max_nodes=args.budget)
    payload = {
        "pc": res.value,
        "exhausted_below": res.exhausted_below,
        "nodes": res.nodes,
        "coloring": [[u, v, c] for (u, v), c in zip(g.edges, res.certificate.colors)],
    }
    _emit(args, payload, f"pc = {res.value}\n" + format_coloring(res.certificate))
    return 0


def _default_set(g, rep, method):
    if method == "two-step":
        if isinstance(rep, ChainSpec):
            return [rep.b1]
        return min_connected_two_way_two_step_dominating(g).d
    if isinstance(rep, ThresholdSpec):
        return [max_weight_dominating_vertex(rep)]
    return min_connected_two_way_dominating(g).d


def cmd_color(args) -> int:
    g, rep = _load(args)
    d = _vertex_list(args.set)
    method = args.method
    if method == "tree":
        out = color_tree(g)
    elif method == "traceable":
        ham = hamiltonian_path(g)
        if ham is None:
            raise GraphError("graph has no Hamiltonian path")
        out = color_traceable(g, ham)
    elif method in ("two-step", "dominating"):
        if d is None:
            d = _default_set(g, rep, method)
        build = color_from_two_step_dominating if method == "two-step" else color_from_dominating
        out = build(g, d, max_nodes=args.budget)
    else:
        if rep is None:
            raise GraphError(f"--method {method} needs --format "
                             f"{'interval' if method == 'interval' else 'arc'}")
        build = color_interval if method == "interval" else color_circular_arc
        out = build(g, rep, max_nodes=args.budget)
    ok = bool(is_proper_path_coloring(g, out.coloring))
    payload = {
        "method": method,
        "construction": out.method,
        "colors_used": out.colors_used,
        "guarantee": out.guarantee,
        "verified": ok,
        "set": sorted(d) if d is not None else None,
        "coloring": [[u, v, c] for (u, v), c in zip(g.edges, out.coloring.colors)],
    }
    head = f"{out.colors_used} colours (guarantee {out.guarantee}, {out.method}, verified={ok})\n"
    _emit(args, payload, head + format_coloring(out.coloring))
    return 0 if ok else 1


def cmd_dominate(args) -> int:
    g, _ = _load(args)
    if args.kind == TWO_WAY:
        cert = min_connected_two_way_dominating(g)
    else:
        cert = min_connected_two_way_two_step_dominating(g)
    if cert is None:
        raise GraphError(f"no connected {args.kind} dominating set")
    payload = {
        "kind": args.kind,
        "set": sorted(cert.d),
        "size": cert.size,
        "size_bound": str(cert.size_bound) if cert.size_bound is not None else None,
        "meets_size_bound": cert.meets_size_bound,
    }
    text = f"{args.kind}: {' '.join(map(str, sorted(cert.d)))} (size {cert.size})\n"
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    report = campaigns.run_campaign(args.theorem, n=args.n, corpus_file=args.corpus,
                                    seed=args.seed, max_nodes=args.budget)
    payload = report.to_dict(include_timing=not args.no_timing)
    status = "PASS" if report.passed else "FAIL"
    text = (f"{report.theorem} {status}: {report.instances} checked of {report.considered}, "
            f"{len(report.violations)} violations, {len(report.errors)} errors "
            f"[{report.corpus}] {report.wall_time:.2f}s\n")
    for v in report.violations:
        text += f"  violation: {v}\n"
    for e in report.errors:
        text += f"  error: {e}\n"
    _emit(args, payload, text)
    if report.errors:
        return 2
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    g, _ = _load(args)
    coloring = parse_coloring(g, _read(args.coloring)) if args.coloring else None
    sys.stdout.write(emit_dot(g, coloring, _vertex_list(args.highlight)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="auto",
                        help="input format (default: guess graph6 or edge-list)")
    common.add_argument("--budget", type=int, default=DEFAULT_MAX_NODES,
                        help="search node budget")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="properconn",
                                     description="Proper connection number toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pc", parents=[common], help="exact proper connection number")
    p.add_argument("file")
    p.set_defaults(func=cmd_pc)

    p = sub.add_parser("color", parents=[common], help="colour by a construction")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--set", help="dominating set, e.g. '0,3,4' (default: a minimum one)")
    p.add_argument("file")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("dominate", parents=[common], help="minimum connected dominating set")
    p.add_argument("--kind", choices=KINDS, default=TWO_WAY_TWO_STEP)
    p.add_argument("file")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("verify", parents=[common], help="run a theorem campaign")
    p.add_argument("theorem", choices=list(campaigns.THEOREMS))
    src = p.add_mutually_exclusive_group()
    src.add_argument("--n", type=int, help="corpus size parameter (max vertex count)")
    src.add_argument("--corpus", help="graph6 file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true",
                   help="omit timings so identical runs give identical JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="DOT drawing")
    p.add_argument("file")
    p.add_argument("--coloring", help="file of 'u v c' lines")
    p.add_argument("--highlight", help="vertices to fill, e.g. '0,2'")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, GraphError, SearchBudgetExceeded, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
