#!/usr/bin/env python3
"""Partial-sum convergence of the Poisson kernel expansion.

The expansion coefficients are nonnegative, so partial sums by total degree
increase monotonically toward the synthesized value at z = 1, which has the
closed form ((1+r)/(1-r))^q / sigma_2q.  Prints the relative gap per degree.
"""

import argparse

import numpy as np

from discwalk import PoissonSzego, family_coefficients, sigma_2q


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=float, default=0.5)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--degree", type=int, default=30)
    args = ap.parse_args()

    spec = PoissonSzego(r=args.r, q=args.q)
    table = family_coefficients(spec, args.degree, args.degree)
    target = ((1.0 + args.r) / (1.0 - args.r)) ** args.q / sigma_2q(args.q)

    by_degree = np.zeros(args.degree + 1)
    for (m, n), v in table.entries.items():
        if m + n <= args.degree:
            by_degree[m + n] += v.real
    partial = np.cumsum(by_degree)

    print(f"Poisson kernel r={args.r}, q={args.q}; value at 1 = {target!r}")
    print(f"{'degree':>6}  {'partial sum':>20}  {'relative gap':>14}")
    for t in range(0, args.degree + 1, max(1, args.degree // 15)):
        gap = (target - partial[t]) / target
        print(f"{t:6d}  {partial[t]:20.15f}  {gap:14.3e}")


if __name__ == "__main__":
    main()
