"""Command-line front end: ``deltamat compute|tree|verify|convert``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .activities import build_tree, render_tree
from .adjacency import adjacency_dm, parse_graph
from .core import CapExceeded, FormatError, parse_dm, serialize_dm
from .engines import (
    Method,
    br_three,
    br_two,
    expand_shifted,
    interlace_one,
    interlace_two,
    transition_full,
    transition_z0,
    tutte_activities,
    tutte_oracle,
)
from .poly import PolyError, canonical_string, shift_expand, term_lines
from .ribbon import graphic_dm, parse_ribbon
from .verify import SUITES, SuiteConfig, run_suite

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4

KIND_METHODS = {
    "transition": ("direct", "deletion_contraction", "activities", "via_relation"),
    "transition-full": ("direct",),
    "interlace2": ("direct", "activities", "deletion_contraction", "via_relation"),
    "interlace1": ("direct", "activities", "via_relation"),
    "br2": ("direct", "via_three", "activities"),
    "br3": ("direct",),
    "tutte": ("direct", "activities"),
}


class UsageError(Exception):
    pass


def load_dm(path: str):
    """Read a .dm, .graph or .ribbon file and return (delta-matroid, order from file or None)."""
    text = Path(path).read_text()
    suffix = Path(path).suffix
    if suffix == ".graph":
        return adjacency_dm(parse_graph(text)), None
    if suffix == ".ribbon":
        G = parse_ribbon(text)
        return graphic_dm(G), None
    if suffix == ".dm":
        return parse_dm(text)
    # unknown extension: sniff the first meaningful line
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            return adjacency_dm(parse_graph(text)), None
        if line.startswith(("vertex ", "edge ")):
            return graphic_dm(parse_ribbon(text)), None
        break
    return parse_dm(text)


def _plain(p):
    """Rewrite shifted (s, t) output in x, y when every exponent allows it."""
    try:
        return expand_shifted(p)
    except PolyError:
        return p


def compute(kind: str, D, method: str, order):
    if kind == "transition":
        return transition_z0(D, method, order)
    if kind == "transition-full":
        return transition_full(D)
    if kind == "interlace2":
        return interlace_two(D, method, order)
    if kind == "interlace1":
        return interlace_one(D, method, order)
    if kind == "br2":
        return _plain(br_two(D, method, order))
    if kind == "br3":
        return shift_expand(br_three(D), {"s": "x"})
    if kind == "tutte":
        if method == Method.ACTIVITIES.value:
            return tutte_activities(D, order)
        return _plain(tutte_oracle(D))
    raise UsageError(f"unknown polynomial {kind!r}")


def _resolve_order(D, file_order, cli_order):
    order = cli_order or file_order
    if order is not None and sorted(order) != sorted(D.names):
        raise UsageError("--order must list every element exactly once")
    return tuple(order) if order is not None else None


def _render(p, fmt: str) -> str:
    return term_lines(p) if fmt == "terms" else canonical_string(p) + "\n"


def run_compute(args, out, err) -> int:
    D, file_order = load_dm(args.file)
    order = _resolve_order(D, file_order, args.order)
    allowed = KIND_METHODS[args.kind]
    if args.method == "all":
        methods = allowed
    elif args.method in allowed:
        methods = (args.method,)
    else:
        raise UsageError(f"method {args.method!r} is not available for {args.kind}; choose from {', '.join(allowed)}, all")
    results = [(m, compute(args.kind, D, m, order)) for m in methods]
    first = results[0][1]
    if all(p == first for _, p in results):
        out.write(_render(first, args.format))
        return EXIT_OK
    for m, p in results:
        out.write(f"{m}: {canonical_string(p)}\n")
    err.write("error: methods disagree\n")
    return EXIT_MISMATCH


def run_tree(args, out, err) -> int:
    D, file_order = load_dm(args.file)
    order = _resolve_order(D, file_order, args.order)
    out.write(render_tree(build_tree(D, order)))
    return EXIT_OK


def run_convert(args, out, err) -> int:
    D, order = load_dm(args.file)
    out.write(serialize_dm(D, order))
    return EXIT_OK


def run_verify(args, out, err) -> int:
    if args.suite not in SUITES:
        err.write(f"error: unknown suite {args.suite!r}; available: {', '.join(sorted(SUITES))}\n")
        return EXIT_PARSE
    cfg = SuiteConfig(seed=args.seed, trials=args.trials, size=args.size,
                      exhaustive=args.exhaustive, orders=args.orders, max_edges=args.max_edges)
    report = run_suite(args.suite, cfg)
    out.write(report.render())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deltamat", description="Delta-matroid polynomials and activities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a polynomial of a .dm/.graph/.ribbon input")
    p.add_argument("kind", choices=sorted(KIND_METHODS))
    p.add_argument("file")
    p.add_argument("--method", default="direct",
                   help="evaluator (direct, deletion_contraction, activities, via_relation, via_three) or 'all'")
    p.add_argument("--order", nargs="+", metavar="ELEMENT", help="total order, lowest first")
    p.add_argument("--format", choices=("canonical", "terms"), default="canonical")
    p.set_defaults(func=run_compute)

    p = sub.add_parser("tree", help="render the computation tree")
    p.add_argument("file")
    p.add_argument("--order", nargs="+", metavar="ELEMENT")
    p.set_defaults(func=run_tree)

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument("suite", help="one of: " + ", ".join(sorted(SUITES)))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20, help="random instances")
    p.add_argument("--size", type=int, default=3, help="largest ground set for the exhaustive corpus")
    p.add_argument("--exhaustive", action="store_true", help="include every delta-matroid up to --size")
    p.add_argument("--orders", type=int, default=5, help="random orders per random instance")
    p.add_argument("--max-edges", type=int, default=5, help="edge bound for random ribbon graphs")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("convert", help="emit the delta-matroid of a .graph/.ribbon input as .dm")
    p.add_argument("file")
    p.set_defaults(func=run_convert)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, err)
    except CapExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (FormatError, UsageError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except ValueError as exc:
        # disconnected ribbon graphs, non-matroid input to tutte, ...
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
