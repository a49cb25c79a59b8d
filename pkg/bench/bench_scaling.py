"""Scaling profiler for the replacement-edge scan.

Runs the doubling ladder n = 2^k (m = density * n) for one engine, prints a
table with the per-phase best-of-N wall times and operation counters, then
the ratio between consecutive rows. A linear scan shows ratios near 2.

Checks (non-zero exit if any fails):

  scan_s ratio    <= --max-time-ratio  (default 2.6)
  steps ratio     <= --max-step-ratio  (default 2.2)
  finds           <= finds_bound on every row

Usage:
    python bench/bench_scaling.py --k-min 16 --k-max 21
    python bench/bench_scaling.py --dsu ref --family random-connected --csv out.csv
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List

import pandas as pd


REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if REPO_ROOT not in sys.path:
    sys.path.insert(0, REPO_ROOT)

from config import settings  # noqa: E402
from generators import FAMILIES  # noqa: E402
from services.benchmark import run_ladder  # noqa: E402


def ladder_frame(rows) -> pd.DataFrame:
    df = pd.DataFrame([r.model_dump() for r in rows])
    if df.empty:
        return df
    df["scan_ratio"] = df["scan_s"] / df["scan_s"].shift(1)
    df["steps_ratio"] = df["steps"] / df["steps"].shift(1)
    df["scan_ns_per_edge"] = df["scan_s"] * 1e9 / df["m"]
    return df


def check(df: pd.DataFrame, max_time_ratio: float, max_step_ratio: float) -> List[str]:
    failures: List[str] = []
    for _, row in df.iterrows():
        if row["finds"] > row["finds_bound"]:
            failures.append(f"n={row['n']}: finds {row['finds']} > bound {row['finds_bound']}")
        if pd.notna(row["scan_ratio"]) and row["scan_ratio"] > max_time_ratio:
            failures.append(f"n={row['n']}: scan ratio {row['scan_ratio']:.2f} > {max_time_ratio}")
        if pd.notna(row["steps_ratio"]) and row["steps_ratio"] > max_step_ratio:
            failures.append(f"n={row['n']}: steps ratio {row['steps_ratio']:.2f} > {max_step_ratio}")
    return failures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--family", default="path-chords", choices=sorted(FAMILIES))
    ap.add_argument("--dsu", default=settings.dsu)
    ap.add_argument("--k-min", type=int, default=16)
    ap.add_argument("--k-max", type=int, default=21)
    ap.add_argument("--density", type=int, default=4)
    ap.add_argument("--repeats", type=int, default=settings.bench_repeats)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-time-ratio", type=float, default=2.6)
    ap.add_argument("--max-step-ratio", type=float, default=2.2)
    ap.add_argument("--csv", help="Also write the table here")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    print(f"family={args.family} dsu={args.dsu} k={args.k_min}..{args.k_max} "
          f"density={args.density} best-of-{args.repeats}")
    rows = run_ladder(
        family=args.family,
        k_min=args.k_min,
        k_max=args.k_max,
        density=args.density,
        engine=args.dsu,
        repeats=args.repeats,
        seed=args.seed,
    )
    df = ladder_frame(rows)
    with pd.option_context("display.width", 200, "display.max_columns", None):
        print(df.to_string(index=False, float_format=lambda v: f"{v:.4f}"))

    if args.csv:
        df.to_csv(args.csv, index=False)
        print(f"wrote {args.csv}")

    failures = check(df, args.max_time_ratio, args.max_step_ratio)
    for line in failures:
        print(f"FAIL {line}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
