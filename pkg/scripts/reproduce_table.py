#!/usr/bin/env python3
"""Print W(P_n^k) for k = 1..K, n = 1..M, and check every route to the value agrees.

    python3 scripts/reproduce_table.py --k 5 --m 10
"""

import argparse

from wiener_degen.bounds import floor_formula, upper_bound_closed, upper_bound_sum
from wiener_degen.constructions import power_of_path
from wiener_degen.graph import wiener


def row(k: int, m: int) -> list[int]:
    out = []
    for n in range(1, m + 1):
        w = wiener(power_of_path(n, k))
        if n >= 2:
            assert w == upper_bound_sum(n, k) == upper_bound_closed(n, k)
            if k <= 5:
                assert w == floor_formula(n, k)
        out.append(w)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k", type=int, default=5, help="largest k")
    p.add_argument("--m", type=int, default=10, help="largest n")
    p.add_argument("--markdown", action="store_true")
    args = p.parse_args()

    if args.markdown:
        print("| k | " + " | ".join(f"n={n}" for n in range(1, args.m + 1)) + " |")
        print("|---" * (args.m + 1) + "|")
    for k in range(1, args.k + 1):
        values = row(k, args.m)
        if args.markdown:
            print(f"| {k} | " + " | ".join(map(str, values)) + " |")
        else:
            print(f"k={k}: " + ", ".join(map(str, values)))


if __name__ == "__main__":
    main()
