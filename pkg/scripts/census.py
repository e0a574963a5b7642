#!/usr/bin/env python3
"""Isomorph-free census of k-trees or maximal k-degenerate graphs with extremal checks.

    python3 scripts/census.py --k 2 --n-max 9
    python3 scripts/census.py --k 3 --n-max 8 --class maximalKDegenerate --json census.json
"""

import argparse
import json
import time

from wiener_degen.enumeration import CLASSES, K_TREE, EnumerationBudgetError, extremal_census


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--class", dest="graph_class", choices=CLASSES, default=K_TREE)
    p.add_argument("--json", metavar="PATH", help="also write all rows as JSON")
    args = p.parse_args()

    rows = []
    print("| n | count | W min | W max | #min | #max | diameters | checks |")
    print("|---|---|---|---|---|---|---|---|")
    for n in range(args.n_min or args.k, args.n_max + 1):
        start = time.perf_counter()
        try:
            s = extremal_census(n, args.k, args.graph_class)
        except EnumerationBudgetError as exc:
            print(f"| {n} | budget exceeded: {exc} |")
            break
        d = s.to_dict()
        d["seconds"] = round(time.perf_counter() - start, 3)
        rows.append(d)
        diam = " ".join(f"{a}:{b}" for a, b in d["diameter_histogram"].items())
        bad = [name for name, ok in d["checks"].items() if ok is False]
        print(f"| {n} | {d['count']} | {d['wiener_min']} | {d['wiener_max']} | "
              f"{len(d['minimizers'])} | {len(d['maximizers'])} | {diam} | "
              f"{'FAILED ' + ','.join(bad) if bad else 'ok'} |")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"schema": 1, "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
