"""``dpgraph`` command line.

Exit codes: 0 completed, 1 counterexample(s) found, 2 input or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .experiments import SCANS, ConfigError, ExperimentConfig, analyze, witness_dot
from .formats import read_graph, to_dot, to_edge_list, to_graph6
from .generators import connected_erdos_renyi, erdos_renyi, random_chordal
from .graph import GraphError
from .isometry import is_dp
from .structure import is_chordal, maximum_cardinality_search, verify_elimination_ordering

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2


def _n_range(text: str) -> tuple[int, int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return int(lo), int(hi)
        return 1, int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    g = read_graph(args.input)
    _emit(analyze(g, exhaustive=args.exhaustive), args.json)
    if args.dot:
        Path(args.dot).write_text(witness_dot(g), encoding="utf-8")
    return EXIT_OK


def cmd_dp(args) -> int:
    g = read_graph(args.input)
    report = is_dp(g, exhaustive=args.exhaustive, greedy_only=args.greedy_only,
                   allow_large=args.allow_large, budget=args.budget)
    if args.json:
        _emit(report.to_dict(), args.json)
    verdict = {True: "dp", False: "not dp", None: "unknown"}[report.is_dp]
    print(f"{to_graph6(g)}: {verdict}")
    for o in report.orders:
        tail = f" {o.vertices.tolist()}" if o.vertices is not None else ""
        print(f"  k={o.k}: {o.status}{tail}")
    return EXIT_OK


def cmd_chordal(args) -> int:
    g = read_graph(args.input)
    o = maximum_cardinality_search(g)
    check = verify_elimination_ordering(g, o)
    print(f"{to_graph6(g)}: {'chordal' if is_chordal(g) else 'not chordal'}")
    print(f"  mcs order: {list(o.order)}")
    if not check:
        print(f"  first non-simplicial position: {check.failed_at}")
    return EXIT_OK


def cmd_scan(args) -> int:
    lo, hi = args.n
    source = args.source
    if source is None:
        source = "random" if args.kind in ("random", "products") or hi > 7 else "enumerate"
    config = ExperimentConfig(seed=args.seed, n_min=lo, n_max=hi, samples=args.samples,
                              p=args.p, source=source, exhaustive=args.exhaustive,
                              greedy_only=args.greedy_only)
    result = SCANS[args.kind](config)
    if args.out:
        rows, summary = result.write(args.out)
        print(f"wrote {rows} and {summary}")
    else:
        sys.stdout.write(result.json_text())
    print(f"{args.kind}: {len(result.rows)} rows, {len(result.counterexamples)} counterexamples",
          file=sys.stderr)
    return EXIT_OK if result.ok else EXIT_COUNTEREXAMPLE


def cmd_gen(args) -> int:
    if args.kind == "er":
        if args.connected:
            g, _ = connected_erdos_renyi(args.n, args.p, args.seed)
        else:
            g = erdos_renyi(args.n, args.p, args.seed)
    else:
        g = random_chordal(args.n, args.seed)
    if args.format == "graph6":
        print(to_graph6(g))
    elif args.format == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        sys.stdout.write(to_dot(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpgraph", description="Distance-preserving graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full diagnostic report for one graph")
    a.add_argument("input", help="edge-list/graph6 file, or a graph6 string")
    a.add_argument("--exhaustive", action="store_true", help="evaluate every order")
    a.add_argument("--json", help="write the report here instead of stdout")
    a.add_argument("--dot", help="write DOT with the order n-1 witness highlighted")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("dp", help="decide the dp property")
    d.add_argument("input")
    d.add_argument("--exhaustive", action="store_true")
    d.add_argument("--greedy-only", action="store_true")
    d.add_argument("--allow-large", action="store_true", help="permit n > 16")
    d.add_argument("--budget", type=int, default=None, help="search node budget per order")
    d.add_argument("--json")
    d.set_defaults(func=cmd_dp)

    c = sub.add_parser("chordal", help="chordality via maximum cardinality search")
    c.add_argument("input")
    c.set_defaults(func=cmd_chordal)

    s = sub.add_parser("scan", help="conjecture and census scans; induced-cycle scans "
                                    "are exponential, keep n <= 12")
    s.add_argument("kind", choices=sorted(SCANS))
    s.add_argument("--n", type=_n_range, default=(1, 6), help="N or LO-HI (default 1-6)")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--source", choices=("enumerate", "random", "chordal"))
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--greedy-only", action="store_true")
    s.add_argument("--out", help="directory for <kind>_rows.csv and <kind>_summary.json")
    s.set_defaults(func=cmd_scan)

    g = sub.add_parser("gen", help="seeded random graphs")
    g.add_argument("kind", choices=("er", "chordal"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--connected", action="store_true", help="redraw until connected (er)")
    g.add_argument("--format", choices=("graph6", "edges", "dot"), default="graph6")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (GraphError, ConfigError, OSError) as exc:
        print(f"dpgraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
