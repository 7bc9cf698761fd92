"""Command-line front end.

Exit codes: 0 success, 1 invalid input or unsupported graph class,
2 construction failure, 3 verification failure, 4 no witness found,
5 search limits exceeded. Every error also prints one line to stderr:
``error kind=<kind> message=<json string>``.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import generators
from .dispatch import STRATEGIES, antimagic_orientation
from .graph_core import (
    AntimagicError,
    ConstructionFailure,
    LabeledDigraph,
    Arc,
    ParseError,
    check_antimagic,
    components,
    degree_profile,
    format_edge_list,
    format_labeled_digraph,
    parse_edge_list,
    parse_labeled_digraph,
)
from .oracle import LimitExceeded, SearchLimits, search

EXIT_OK, EXIT_INVALID, EXIT_CONSTRUCTION, EXIT_VERIFY, EXIT_NO_WITNESS, EXIT_LIMIT = range(6)


def _fail(kind: str, message: str, code: int) -> int:
    print(f"error kind={kind} message={json.dumps(message)}", file=sys.stderr)
    return code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None) -> None:
    if path and path != "-":
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _params(items: list[str]) -> dict[str, str]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {item!r}")
        out[key] = value
    return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def cmd_gen(args) -> int:
    if args.family == "cycles":
        if len(args.params) != 1:
            raise ParseError("usage: gen cycles 3,5,4")
        g = generators.cycle_union(_int_list(args.params[0]))
    else:
        params = _params(args.params)
        try:
            if args.family == "circulant":
                g = generators.circulant(int(params["n"]), _int_list(params["offsets"]))
            else:
                seed = args.seed if args.seed is not None else int(params.get("seed", 0))
                g = generators.random_regular(int(params["n"]), int(params["k"]), seed,
                                              connected=args.connected)
        except KeyError as exc:
            raise ParseError(f"missing parameter {exc.args[0]}") from None
        except ValueError as exc:
            if isinstance(exc, AntimagicError):
                raise
            raise ParseError(str(exc)) from None
    _write(format_edge_list(g), args.output)
    return EXIT_OK


def digraph_json(d: LabeledDigraph, sums: dict[int, int], antimagic: bool) -> dict:
    return {
        "n": d.n,
        "arcs": [{"tail": a.tail, "head": a.head, "label": a.label} for a in d.arcs],
        "sums": {str(v): s for v, s in sorted(sums.items())},
        "antimagic": antimagic,
    }


def to_dot(d: LabeledDigraph, sums: dict[int, int]) -> str:
    lines = ["digraph antimagic {"]
    lines += [f'  {v} [label="{v}\\ns={sums[v]}", sum={sums[v]}];' for v in sorted(sums)]
    lines += [f'  {a.tail} -> {a.head} [label="{a.label}"];' for a in d.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_orient(args) -> int:
    g = parse_edge_list(_read(args.graph))
    start = time.perf_counter()
    try:
        d, strategy = antimagic_orientation(g, args.strategy)
    except ConstructionFailure as exc:
        return _fail(exc.kind, str(exc), EXIT_CONSTRUCTION)
    elapsed = time.perf_counter() - start
    report = check_antimagic(d)
    if not report.antimagic:  # constructions already verify; this is the last line of defence
        return _fail("construction-failure", f"duplicates {report.duplicates}", EXIT_CONSTRUCTION)

    if args.format == "json":
        doc = digraph_json(d, report.sums, report.antimagic)
        doc["strategy"] = strategy
        doc["input"] = {
            "n": g.n,
            "m": g.m,
            "degree_profile": {str(k): c for k, c in degree_profile(g).items()},
            "components": len(components(g)),
        }
        doc["seconds"] = round(elapsed, 6)
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "dot":
        text = to_dot(d, report.sums)
    else:
        text = f"# strategy={strategy} antimagic=true\n" + format_labeled_digraph(d)
    _write(text, args.output)
    return EXIT_OK


def load_digraph(text: str) -> LabeledDigraph:
    """Labeled digraph from either the text format or ``orient``'s JSON."""
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            return LabeledDigraph(doc["n"], tuple(Arc(a["tail"], a["head"], a["label"]) for a in doc["arcs"]))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad JSON digraph: {exc}") from None
    return parse_labeled_digraph(text)


def cmd_verify(args) -> int:
    d = load_digraph(_read(args.digraph))
    try:
        report = check_antimagic(d)
    except AntimagicError as exc:
        return _fail(exc.kind, str(exc), EXIT_VERIFY)
    if report.antimagic:
        print(f"antimagic: {d.n} vertices, {d.m} arcs, all sums distinct")
        return EXIT_OK
    for group in report.duplicates:
        print(f"duplicate sum {report.sums[group[0]]}: vertices {' '.join(map(str, group))}")
    return _fail("duplicate-sums", f"{len(report.duplicates)} groups of vertices share a sum", EXIT_VERIFY)


def cmd_search(args) -> int:
    g = parse_edge_list(_read(args.graph))
    limits = SearchLimits(max_edges=args.max_edges, max_states=args.max_states, find_all=args.all)
    try:
        result = search(g, limits)
    except LimitExceeded as exc:
        return _fail(exc.kind, str(exc), EXIT_LIMIT)
    doc = {"found": result.found, "states": result.states, "witnesses": []}
    for w in result.witnesses:
        report = check_antimagic(w)
        doc["witnesses"].append(digraph_json(w, report.sums, report.antimagic))
    _write(json.dumps(doc, indent=2) + "\n", args.output)
    if not result.found:
        return _fail("no-witness", "no antimagic orientation exists", EXIT_NO_WITNESS)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antimagic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph in edge-list format")
    p.add_argument("family", choices=["cycles", "circulant", "regular"])
    p.add_argument("params", nargs="*", help="3,5,4 | n=8 offsets=1,2 | n=20 k=4 seed=7")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--connected", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("orient", help="construct and verify an antimagic orientation")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--format", choices=["json", "dot", "edgelist"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify", help="check a labeled digraph for the antimagic property")
    p.add_argument("digraph", help="labeled-digraph file (text or orient JSON), or -")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for an antimagic orientation")
    p.add_argument("graph")
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--max-states", type=int, default=SearchLimits.max_states)
    p.add_argument("--all", action="store_true", help="report every witness")
    p.add_argument("--seed", type=int, default=None, help="accepted for uniformity; the search is deterministic")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConstructionFailure as exc:
        return _fail(exc.kind, str(exc), EXIT_CONSTRUCTION)
    except AntimagicError as exc:
        return _fail(exc.kind, str(exc), EXIT_INVALID)
    except ValueError as exc:
        return _fail("invalid-input", str(exc), EXIT_INVALID)


if __name__ == "__main__":
    sys.exit(main())
