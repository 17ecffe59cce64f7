#!/usr/bin/env python3
"""Sweep the dimension identity chain over a parameter box and print a table.

Example:
    python3 scripts/run_dimension_sweep.py -m 1:4 -g 2:6 -n 1:4 --format md
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from parahiggs.cli import _format_reports, _parse_range  # noqa: E402
from parahiggs.dimensions import CurveParams, identity_suite  # noqa: E402
from parahiggs.groups import GroupSpec  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", default="sp,so-even,so-odd")
    ap.add_argument("-m", default="1:4")
    ap.add_argument("-g", default="2:6")
    ap.add_argument("-n", default="1:4")
    ap.add_argument("--deg-m", type=int, default=0)
    ap.add_argument("--format", default="md", choices=("json", "csv", "md"))
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = [
        identity_suite(GroupSpec(kind, m), CurveParams(g, n, args.deg_m))
        for kind in sorted(args.groups.split(","))
        for m in _parse_range(args.m)
        for g in _parse_range(args.g)
        for n in _parse_range(args.n)
    ]
    elapsed = time.perf_counter() - t0
    print(_format_reports(reports, args.format))
    failed = [r for r in reports if not r.passed]
    print(
        f"\n{len(reports)} tuples in {elapsed * 1e3:.1f} ms, "
        f"{len(reports) - len(failed)} passed, {len(failed)} failed",
        file=sys.stderr,
    )
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
