#!/usr/bin/env python3
"""Scan the frequency range and chart how the certified radius varies.

Writes a CSV table of certified candidates (and recorded failures) per
frequency, plus an optional CSV sweep of the norm gap delta(a) at the
best frequency for plotting the sign change.
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path

from korenblum import delta_of_a, fraction_to_decimal, scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=2)
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--safety", type=float, default=5e-6)
    parser.add_argument("--out", type=Path, default=Path("scan.csv"))
    parser.add_argument("--delta-sweep", type=Path, default=None,
                        help="also write delta(a) samples around the best n here")
    args = parser.parse_args()

    result = scan(range(args.n_min, args.n_max + 1), safety=args.safety)

    with args.out.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "a", "a_star", "c", "delta_lower", "improves_0.67795", "error"])
        for row in result.table():
            if row.candidate is None:
                writer.writerow([row.n, "", "", "", "", "", row.error])
                continue
            cand = row.candidate
            writer.writerow([
                row.n,
                fraction_to_decimal(cand.params.a),
                f"{cand.a_star:.12f}" if cand.a_star is not None else "",
                f"{cand.c:.15f}",
                f"{float(cand.delta_lower):.6e}",
                cand.improves_wang,
                "",
            ])
    print(f"scan table written to {args.out}")

    best = result.best
    if best is None:
        print("no certified candidate in the range")
        return 1
    print(f"best: n = {best.params.n}, a = {fraction_to_decimal(best.params.a)}, "
          f"c = {best.c:.12f}, improves 0.67795: {best.improves_wang}")

    if args.delta_sweep is not None:
        n = best.params.n
        center = float(best.params.a)
        with args.delta_sweep.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["a", "delta_lower", "delta_upper"])
            for i in range(201):
                a = center - 0.01 + 0.02 * i / 200
                if not 0 < a < 1:
                    continue
                d = delta_of_a(n, a)
                writer.writerow([repr(a), repr(float(d.delta_lower)), repr(float(d.delta_upper))])
        print(f"delta sweep written to {args.delta_sweep}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
