"""Command-line front end.

Exit codes: 0 success, 1 refuted claim (or skipped claim with --strict),
2 usage or parse error, 3 domain error (e.g. disconnected input).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds
from .constructions import ConstructionTrace, construct_k_tree, construct_maximal_k_degenerate, named_graph
from .enumeration import (DEFAULT_CONFIG, K_TREE, MAXIMAL_K_DEGENERATE,
                          EnumerationBudgetError, extremal_census)
from .formats import FormatError, read_graph, write_graph
from .graph import GraphError, distances
from .verify import SCHEMA, SUITES, VerifyOptions, run_suite

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

CLASS_ALIASES = {"ktree": K_TREE, "k-tree": K_TREE, K_TREE: K_TREE,
                 "mkd": MAXIMAL_K_DEGENERATE, "maximal": MAXIMAL_K_DEGENERATE,
                 MAXIMAL_K_DEGENERATE: MAXIMAL_K_DEGENERATE}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit_json(obj: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True))


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_USAGE) from None


def cmd_wiener(args) -> int:
    try:
        g = read_graph(_read_input(args.input), args.format)
    except FormatError as exc:
        raise CliError(f"parse error: {exc}", EXIT_USAGE) from None
    s = distances(g)
    if not s.connected:
        raise CliError("graph is disconnected; Wiener index is infinite", EXIT_DOMAIN)
    if args.json:
        _emit_json({
            "n": g.n, "m": g.size, "wiener": s.wiener, "diameter": s.diameter,
            "status": list(s.status), "eccentricity": list(s.eccentricity),
            "distance_distribution": list(s.distribution),
        })
    else:
        st = s.status or (0,)
        print(f"n={g.n} m={g.size} W={s.wiener} diameter={s.diameter}")
        print(f"status min={min(st)} max={max(st)} sum={sum(st)}")
        print("distribution " + " ".join(f"d{i}={c}" for i, c in enumerate(s.distribution, 1)))
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.name == "trace":
            if not args.trace:
                raise CliError("generate trace needs --trace FILE", EXIT_USAGE)
            trace = ConstructionTrace.from_json(_read_input(args.trace))
            build = construct_k_tree if trace.clique_roots_required else construct_maximal_k_degenerate
            g = build(trace)
        else:
            params = {key: getattr(args, key) for key in ("n", "k") if getattr(args, key) is not None}
            if args.tree:
                params["tree"] = read_graph(_read_input(args.tree), args.format)
            g = named_graph(args.name, **params)
    except KeyError as exc:
        raise CliError(str(exc.args[0]), EXIT_USAGE) from None
    except (FormatError, ValueError) as exc:
        # GraphError subclasses ValueError; both mean bad parameters here
        raise CliError(str(exc), EXIT_USAGE) from None
    sys.stdout.write(write_graph(g, args.output_format))
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        rep = bounds.bounds_report(args.n, args.k)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    if args.json:
        _emit_json(rep.to_dict())
    else:
        for key, value in rep.to_dict().items():
            print(f"{key}={value}")
    return EXIT_OK


def cmd_sequence(args) -> int:
    try:
        seq = bounds.sequence(args.k, args.m)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    if args.json:
        _emit_json({"k": args.k, "m": args.m, "sequence": seq})
    else:
        print(", ".join(map(str, seq)))
    return EXIT_OK


def _config(args):
    cfg = DEFAULT_CONFIG
    if getattr(args, "ceiling", None) is not None:
        ks = [args.k] if args.k is not None else [1, 2, 3]
        for k in ks:
            cfg = cfg.with_ceiling(k, args.ceiling)
    return cfg


def cmd_enumerate(args) -> int:
    graph_class = CLASS_ALIASES[args.graph_class]
    try:
        summary = extremal_census(args.n, args.k, graph_class, _config(args))
    except EnumerationBudgetError as exc:
        raise CliError(f"budget exceeded: {exc}", EXIT_DOMAIN) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    for target, forms in ((args.dump_maximizers, summary.maximizers),
                          (args.dump_minimizers, summary.minimizers)):
        if target:
            Path(target).write_text("".join(f.code + "\n" for f in sorted(forms)))
    if args.json:
        _emit_json(summary.to_dict())
    else:
        d = summary.to_dict()
        print(f"n={d['n']} k={d['k']} class={d['class']} count={d['count']}")
        print(f"wiener_min={d['wiener_min']} (lower bound {d['lower_bound']}) "
              f"wiener_max={d['wiener_max']} (upper bound {d['upper_bound']})")
        print(f"minimizers={len(summary.minimizers)} maximizers={len(summary.maximizers)}")
        print("diameters " + " ".join(f"{k}:{v}" for k, v in d["diameter_histogram"].items()))
        for name, ok in summary.checks:
            print(f"check {name}: {'n/a' if ok is None else ('ok' if ok else 'FAILED')}")
    return EXIT_OK


def cmd_verify(args) -> int:
    opts = VerifyOptions(k=args.k, max_n=args.max_n, samples=args.samples, seed=args.seed,
                         config=_config(args))
    report = run_suite(args.suite, opts)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        for c in report.claims:
            line = f"{c.status:9s} {c.claim_id:28s} [criterion {c.criterion}] {c.detail}"
            if c.witness:
                line += f" witness={c.witness}"
            print(line)
        print(f"{len(report.claims)} claims, {len(report.refuted)} refuted, "
              f"{len(report.skipped)} skipped in {report.runtime_seconds:.1f}s")
    if report.refuted or (args.strict and report.skipped):
        return EXIT_REFUTED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wiener-degen",
                                description="Wiener index bounds for maximal k-degenerate graphs")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("wiener", help="distance invariants of one graph")
    w.add_argument("input", nargs="?", help="graph file (default stdin)")
    w.add_argument("--format", choices=["edges", "g6"], default="edges")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_wiener)

    g = sub.add_parser("generate", help="emit a named construction")
    g.add_argument("name", help="pnk, tr2, fan, star, t5, kk-join-empty, tree-join, "
                                "order7-k3-join-k4bar, order7-k2-join-t5, order7-p5-join-k2, "
                                "order7-k4-regions, path, cycle, complete, or trace")
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--tree", help="tree file for tree-join")
    g.add_argument("--trace", help="JSON construction trace for 'trace'")
    g.add_argument("--format", choices=["edges", "g6"], default="edges", help="format of --tree")
    g.add_argument("--output-format", "-o", choices=["edges", "g6"], default="edges")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bounds", help="bounds report for one (n, k)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sequence", help="W(P_n^k) for n = 1..m")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int, default=10)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sequence)

    e = sub.add_parser("enumerate", help="isomorph-free census with extremal cross-checks")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--class", dest="graph_class", choices=sorted(CLASS_ALIASES), default="ktree")
    e.add_argument("--ceiling", type=int, help="override the enumeration ceiling for this k")
    e.add_argument("--dump-maximizers", metavar="PATH", help="write maximizers as graph6 lines")
    e.add_argument("--dump-minimizers", metavar="PATH", help="write minimizers as graph6 lines")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a claim suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--k", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--ceiling", type=int)
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--strict", action="store_true", help="treat skipped claims as failures")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
