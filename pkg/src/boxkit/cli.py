"""``boxkit`` command line.

Exit codes: 0 success or valid, 1 verified false or refuted, 2 usage or
format error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from boxkit import io
from boxkit.catalog import catalog_summary, enumerate_catalog
from boxkit.completion import (
    CertificateError,
    Cover,
    boxicity_bruteforce,
    boxicity_co_line,
    minimal_interval_completions,
    min_completion,
    verify_cover,
)
from boxkit.graph import complement, complete_graph, kneser_n2, line_graph
from boxkit.interval_order import intervals_from_ordering
from boxkit.kernels import SearchBudgetExceeded
from boxkit.kneser import kneser_boxicity


class UsageError(Exception):
    pass


def _threads(args) -> None:
    if args.threads is not None and args.threads < 1:
        raise UsageError("--threads must be at least 1")


def _graph(path: str):
    try:
        return io.read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_gen(args, out) -> int:
    kind = args.kind
    if kind in ("complete", "kneser"):
        try:
            n = int(args.arg)
        except ValueError:
            raise UsageError(f"gen {kind} needs an integer, got {args.arg!r}") from None
        if n < 0:
            raise UsageError("n must be nonnegative")
        g = complete_graph(n) if kind == "complete" else kneser_n2(n)
    else:
        base = _graph(args.arg)
        g = line_graph(base).lg if kind == "line-graph" else complement(base)
    out.write(io.to_dot(g) if args.dot else io.format_edge_list(g))
    return 0


def cmd_catalog(args, out) -> int:
    if args.n < 5:
        raise UsageError("catalog needs n >= 5")
    entries = enumerate_catalog(args.n)
    if args.summary:
        io.dump_json(io.document("catalog-summary", {"n": args.n, **catalog_summary(entries)}), out)
    else:
        io.dump_json(io.document("catalog", {"n": args.n, "entries": [e.to_json() for e in entries]}), out)
    return 0


def cmd_complete(args, out) -> int:
    g = _graph(args.graph)
    weights = None
    if args.weights:
        try:
            with open(args.weights) as fh:
                weights = io.parse_weights(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.weights}: {exc.strerror}") from None
    if args.all:
        comps = minimal_interval_completions(g, weights)
        io.dump_json(io.document("completions", {"completions": [c.to_json() for c in comps]}), out)
    else:
        io.dump_json(io.document("completion", min_completion(g, weights).to_json()), out)
    return 0


def cmd_boxicity(args, out) -> int:
    g = _graph(args.graph)
    if args.bruteforce:
        if g.n > 10:
            raise UsageError("--bruteforce handles graphs with at most 10 vertices")
        res = boxicity_bruteforce(g, args.max_k, budget=args.budget, threads=args.threads)
        target = complement(g)
    else:
        res = boxicity_co_line(g, args.max_k, budget=args.budget, threads=args.threads)
        target = line_graph(g).lg
    if args.dot:
        colors = [list(c.edges) for c in res.cover.colors] if res.cover else []
        out.write(io.to_dot(target, colors))
    else:
        io.dump_json(io.document("boxicity", res.to_json()), out)
    return 0 if res.boxicity is not None else 1


def cmd_kneser(args, out) -> int:
    if args.n < 5:
        raise UsageError("kneser needs n >= 5")
    res = kneser_boxicity(args.n, full_refute=args.full_refute, budget=args.budget, threads=args.threads)
    if args.dot:
        lg = line_graph(complete_graph(args.n)).lg
        out.write(io.to_dot(lg, [list(c.edges) for c in res.upper_cover.colors]))
    else:
        io.dump_json(io.document("kneser", res.to_json()), out)
    return 0


def _cover_payload(doc):
    io.check_format(doc)
    if isinstance(doc, list):
        return doc
    if isinstance(doc, dict):
        for key in ("cover", "upper_cover", "data"):
            if key in doc and doc[key] is not None:
                return doc[key]
    raise io.FormatError("no cover found in certificate")


def cmd_verify(args, out) -> int:
    lg = _graph(args.graph)
    try:
        cover = Cover.from_json(_cover_payload(io.load_json(args.cover)))
        report = verify_cover(lg, cover)
    except CertificateError as exc:
        raise io.FormatError(str(exc)) from None
    io.dump_json(io.document("verification", {"valid": report.ok, "message": report.message}), out)
    if not report:
        print(f"invalid: {report.message}", file=sys.stderr)
    return 0 if report else 1


def cmd_intervals(args, out) -> int:
    h = _graph(args.graph)
    doc = io.load_json(args.ordering)
    io.check_format(doc)
    seq = doc.get("witness", doc.get("ordering")) if isinstance(doc, dict) else doc
    if not isinstance(seq, list):
        raise io.FormatError("ordering must be a JSON array of vertex indices")
    try:
        model = intervals_from_ordering(h, [int(v) for v in seq])
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    io.dump_json(io.document("intervals", {"intervals": model.to_json()}), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boxkit", description="Interval-order subgraphs of line graphs and boxicity of their complements.")
    p.add_argument("--threads", type=int, default=None, help="worker cap (default: $BOXKIT_THREADS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a graph as an edge list")
    g.add_argument("kind", choices=["complete", "kneser", "line-graph", "complement"])
    g.add_argument("arg", help="n for complete/kneser, a graph file otherwise")
    g.add_argument("--dot", action="store_true")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("catalog", help="maximal interval-order subgraphs of L(K_n)")
    c.add_argument("n", type=int)
    c.add_argument("--summary", action="store_true")
    c.set_defaults(func=cmd_catalog)

    m = sub.add_parser("complete", help="minimum interval completion of co-L(G)")
    m.add_argument("graph")
    m.add_argument("--weights")
    m.add_argument("--all", action="store_true", help="list every minimal completion")
    m.set_defaults(func=cmd_complete)

    b = sub.add_parser("boxicity", help="boxicity of co-L(G), or of G with --bruteforce")
    b.add_argument("graph")
    b.add_argument("--max-k", type=int, default=None)
    b.add_argument("--budget", type=int, default=None, help="node budget per root branch of the cover search")
    mode = b.add_mutually_exclusive_group()
    mode.add_argument("--co-line", action="store_true", help="treat the file as base graph G (default)")
    mode.add_argument("--bruteforce", action="store_true", help="treat the file as the graph itself")
    b.add_argument("--dot", action="store_true")
    b.set_defaults(func=cmd_boxicity)

    k = sub.add_parser("kneser", help="boxicity of KG(n,2) with certificates")
    k.add_argument("n", type=int)
    k.add_argument("--full-refute", action="store_true")
    k.add_argument("--budget", type=int, default=None)
    k.add_argument("--dot", action="store_true")
    k.set_defaults(func=cmd_kneser)

    v = sub.add_parser("verify", help="check a cover certificate against a graph")
    v.add_argument("graph")
    v.add_argument("cover")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("intervals", help="interval model for an interval-order graph and ordering")
    i.add_argument("graph")
    i.add_argument("ordering")
    i.set_defaults(func=cmd_intervals)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        _threads(args)
        return args.func(args, out)
    except (UsageError, io.FormatError) as exc:
        print(f"boxkit: {exc}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"boxkit: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
