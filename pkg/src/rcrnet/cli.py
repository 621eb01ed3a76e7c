"""Command-line front end.

Exit codes: 0 success, 1 usage or parameter error, 2 scenario/golden
mismatch or sweep violation, 3 unreachable destination (``distance``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import analysis as an
from .report import DEFAULT_DIAMETER_CAP, analyze
from .scenarios import SCENARIOS, run_scenario
from .sweep import SweepSpec, parse_range, run_sweep
from .symmetry import DEFAULT_SYMMETRY_CAP
from .topology import (
    MAX_NODES,
    CoordError,
    NetworkParams,
    ParameterError,
    SizeError,
    Variant,
    build,
    format_coord,
    parse_coord,
    to_dot,
    to_edge_list,
    to_json,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_UNREACHABLE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_network_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("variant", choices=[v.value for v in Variant])
    p.add_argument("k", type=int)
    p.add_argument("r", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--node-cap", type=int, default=MAX_NODES)


def _params(args) -> NetworkParams:
    return NetworkParams(args.k, args.r, args.j, Variant(args.variant))


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    g = build(_params(args), max_nodes=args.node_cap)
    render = {"dot": to_dot, "edges": to_edge_list, "json": to_json}[args.format]
    _write(render(g), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    report = analyze(
        _params(args),
        exact_bisection=args.exact_bisection,
        symmetry=args.symmetry,
        node_cap=args.node_cap,
        bisect_cap=args.bisect_cap,
        symmetry_cap=args.symmetry_cap,
        diameter_cap=args.diameter_cap,
    )
    _write(report.to_json(), args.output)
    return EXIT_OK if not report.violations() else EXIT_MISMATCH


def cmd_paper_examples(args) -> int:
    names = args.only or list(SCENARIOS)
    failed = 0
    for name in names:
        for check in run_scenario(name):
            status = "PASS" if check.ok else "FAIL"
            line = f"{status}  {check.scenario:<9} {check.name}"
            if not check.ok:
                failed += 1
                line += f"  expected={check.expected!r} observed={check.observed!r}"
            print(line)
    print(f"{failed} mismatches")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_sweep(args) -> int:
    variants = list(Variant) if args.variant == "both" else [Variant(args.variant)]
    spec = SweepSpec(
        variants=tuple(variants),
        k=parse_range(args.k),
        r=parse_range(args.r),
        j=parse_range(args.j),
        node_cap=args.node_cap,
        exact_bisection=args.exact_bisection,
        bisect_cap=args.bisect_cap,
        symmetry=args.symmetry,
        symmetry_cap=args.symmetry_cap,
    )
    result = run_sweep(spec, jobs=args.jobs)
    body = result.to_csv() if args.format == "csv" else result.to_table()
    _write(body, args.output)
    sys.stdout.write(result.summary())
    return EXIT_MISMATCH if result.violations else EXIT_OK


def cmd_distance(args) -> int:
    params = _params(args)
    g = build(params, max_nodes=args.node_cap)
    src = parse_coord(args.source, params)
    dst = parse_coord(args.target, params)
    path = an.shortest_path(g, src, dst)
    if path is None:
        print("unreachable")
        return EXIT_UNREACHABLE
    print(len(path) - 1)
    print(f"<{format_coord(g.coord(path[0]))}>")
    for u, v in zip(path, path[1:]):
        print(f"  --{g.edge_kind(u, v).value}--> <{format_coord(g.coord(v))}>")
    return EXIT_OK


def _read_cut(path: str, params: NetworkParams) -> list:
    """One edge per line: two node ids or two coordinates, '#' starts a comment."""
    edges = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            a, b = line.split()[:2]
            if ";" in a:
                edges.append((parse_coord(a, params), parse_coord(b, params)))
            else:
                edges.append((int(a), int(b)))
    return edges


def cmd_bisect(args) -> int:
    params = _params(args)
    g = build(params, max_nodes=args.node_cap)
    bound = an.bisection_upper_bound(params)
    if args.mode == "exact":
        width = an.exact_bisection(g, args.bisect_cap)
        print(json.dumps({"params": params.as_dict(), "exact": width, "upper_bound": bound}))
        return EXIT_OK
    check = an.verify_cut(g, _read_cut(args.cut, params))
    print(json.dumps({
        "params": params.as_dict(),
        "bisects": check.bisects,
        "sides": list(check.sides) if check.sides else None,
        "components": list(check.components),
        "upper_bound": bound,
    }))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rcrnet", description="Recursive-cube-of-rings topology generator and analyzer.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="emit a topology as dot, edge list or json")
    _add_network_args(p)
    p.add_argument("--format", choices=["dot", "edges", "json"], default="edges")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="analysis report as JSON")
    _add_network_args(p)
    p.add_argument("--exact-bisection", action="store_true")
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--bisect-cap", type=int, default=an.DEFAULT_BISECT_CAP)
    p.add_argument("--symmetry-cap", type=int, default=DEFAULT_SYMMETRY_CAP)
    p.add_argument("--diameter-cap", type=int, default=DEFAULT_DIAMETER_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("paper-examples", help="replay the worked examples against their goldens")
    p.add_argument("--only", nargs="+", choices=list(SCENARIOS))
    p.set_defaults(func=cmd_paper_examples)

    p = sub.add_parser("sweep", help="cross-check predictions over a parameter grid")
    p.add_argument("variant", choices=[v.value for v in Variant] + ["both"])
    p.add_argument("-k", default="1..5", help="inclusive range, e.g. 1..5")
    p.add_argument("-r", default="1..6")
    p.add_argument("-j", default="0..6")
    p.add_argument("--node-cap", type=int, default=4096)
    p.add_argument("--exact-bisection", action="store_true")
    p.add_argument("--bisect-cap", type=int, default=an.DEFAULT_BISECT_CAP)
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--symmetry-cap", type=int, default=DEFAULT_SYMMETRY_CAP)
    p.add_argument("--format", choices=["table", "csv"], default="table")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("distance", help="hop count and one shortest path between two coordinates")
    _add_network_args(p)
    p.add_argument("source", help='coordinate such as "000;0"')
    p.add_argument("target")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("bisect", help="exact bisection width or check a proposed cut")
    p.add_argument("mode", choices=["exact", "verify-cut"])
    _add_network_args(p)
    p.add_argument("--bisect-cap", type=int, default=an.DEFAULT_BISECT_CAP)
    p.add_argument("--cut", help="file listing the cut edges (verify-cut)")
    p.set_defaults(func=cmd_bisect)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "mode", None) == "verify-cut" and not args.cut:
        parser.error("verify-cut needs --cut FILE")
    try:
        return args.func(args)
    except (ParameterError, SizeError, CoordError, an.BisectionCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
