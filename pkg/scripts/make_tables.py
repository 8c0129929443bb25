#!/usr/bin/env python3
"""Emit every closed-form table (CSV + JSON) into one output directory.

Usage:
    python scripts/make_tables.py [--out tables/]
"""

import argparse
import sys

from polylog.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="tables")
    args = parser.parse_args()

    jobs = [("inm", 6), ("hnm", 6), ("sigma", 8), ("ipq", 6)]
    for kind, weight in jobs:
        code = cli_main(["table", "--kind", kind, "--max-weight", str(weight),
                         "--out", args.out])
        if code:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
