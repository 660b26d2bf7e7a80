#!/usr/bin/env python3
"""Reproduce the certified bound at the reference parameters.

Runs the full verification chain at a = 0.6666714, n = 10, prints the
human-readable evidence and writes the JSON certificate next to this
script (or to --out).
"""

from __future__ import annotations

import argparse
from pathlib import Path

from korenblum import (
    WANG_UPPER_BOUND,
    critical_root,
    norm_difference,
    reference_params,
    run_verification,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("reference_certificate.json"))
    args = parser.parse_args()

    params = reference_params()
    print(f"parameters: {params.describe()}")

    c = critical_root(params)
    print(f"critical radius        c = {c:.15f}")
    print(f"previous best bound      = {WANG_UPPER_BOUND}")
    print(f"improvement margin       = {WANG_UPPER_BOUND - c:.3e}")

    delta = norm_difference(params, K=64, mode="exact")
    print(f"exact norm gap in [{float(delta.delta_lower):.12e}, {float(delta.delta_upper):.12e}]")
    print(f"gap certified positive: {delta.certifies}")

    cert = run_verification(params, exact=True)
    args.out.write_text(cert.to_json() + "\n")
    print(f"verification {'PASSED' if cert.passed else 'FAILED'} "
          f"in {cert.wall_time_s:.2f} s; certificate written to {args.out}")
    return 0 if cert.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
