#!/usr/bin/env python3
"""Run the full fixture verification suite and print the report.

Exit code 1 if any computed check fails (external claims never count)."""

import argparse
import sys

from modpcurves.verify import verify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixtures", default=None,
                        help="fixture directory (default: packaged)")
    args = parser.parse_args()
    report = verify_all(args.fixtures)
    print(report.render())
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
