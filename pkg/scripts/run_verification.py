#!/usr/bin/env python3
"""Run the full identity-verification suite and write a JSON report.

Usage:
    python scripts/run_verification.py [--suite all] [--out report.json]
"""

import argparse
import sys
import time
from pathlib import Path

from polylog.verify import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", default="all",
                        choices=["all", "ipq", "sums", "lognm", "appendix"])
    parser.add_argument("--out", default="verification_report.json")
    parser.add_argument("--tol-scale", type=float, default=1.0)
    args = parser.parse_args()

    start = time.monotonic()
    report = run_suite(args.suite, args.tol_scale)
    elapsed = time.monotonic() - start

    for entry in report.entries:
        if entry.status == "fail":
            print(f"FAIL {entry.identity_id}  err={entry.abs_error:.3e} "
                  f"tol={entry.tolerance:.1e}  {entry.note}")
    print(f"{report.passed} pass, {report.failed} fail in {elapsed:.1f}s")
    Path(args.out).write_text(report.to_json(indent=2))
    print(f"report written to {args.out}")
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
