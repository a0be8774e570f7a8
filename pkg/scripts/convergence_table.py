#!/usr/bin/env python3
"""Print how the normalized total cost approaches its leading constant.

For each order a the table shows S(n, a) / n^(1 - a/2) along a decade grid
next to the exact constant Gamma(a/2+1) / (2^(a/2)(1+a)), plus the fitted
remainder exponent.
"""

import argparse

from anchor_moments.asymptotics import remainder_diagnostic


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=str, default="1,2,3",
                        help="comma-separated moment orders")
    parser.add_argument("--grid", type=str, default="100,1000,10000,100000")
    args = parser.parse_args()
    grid = [int(x) for x in args.grid.split(",")]

    for a in (int(x) for x in args.orders.split(",")):
        report = remainder_diagnostic(a, grid)
        print(f"a = {a}:  constant = {report.constant_float:.10f}  ({report.constant})")
        for n, measured, normalized in zip(report.n_grid, report.measured, report.normalized):
            dev = normalized - report.constant_float
            print(f"  n = {n:>8}  S = {measured:.10e}  normalized = {normalized:.8f}  dev = {dev:+.2e}")
        print(f"  fitted remainder exponent: {report.fitted_exponent:+.3f}"
              f"{'  (degenerate fit)' if report.degenerate_fit else ''}")
        print()


if __name__ == "__main__":
    main()
