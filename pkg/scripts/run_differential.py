#!/usr/bin/env python3
"""Run the construction-vs-search differential and write the JSON report.

Prints the totals and the sha256 of the report bytes, so two runs can be
compared without diffing the files.
"""
import argparse
import json
import sys
import time
from pathlib import Path

from locint.audit import differential_report, report_bytes, report_digest


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-points", type=int, default=6)
    ap.add_argument("--corpus-max", type=int, default=6)
    ap.add_argument("--no-audit", action="store_true")
    ap.add_argument("--out", type=Path, default=None, help="report path (default: stdout summary only)")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    report = differential_report(args.seed, args.count, args.max_points, args.corpus_max,
                                 audit=not args.no_audit)
    elapsed = time.perf_counter() - t0
    if args.out is not None:
        args.out.write_bytes(report_bytes(report))
    print(json.dumps(report["totals"], indent=2))
    for name, lem in report["lemmas"].items():
        print(f"{name:>12}: {lem['checked']:>7} checked, {lem['failures']} failures")
    print(f"sha256 {report_digest(report)}  ({elapsed:.1f}s)")
    t = report["totals"]
    return 0 if t["both_consistent"] == t["families"] and not t["audit_failures"] else 1


if __name__ == "__main__":
    sys.exit(main())
