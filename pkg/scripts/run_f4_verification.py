#!/usr/bin/env python3
"""Run the full F4 verification pipeline and print the report.

Equivalent to `chowring verify f4`; kept as a script so the pipeline can
be driven without installing the console entry point.
"""

import argparse
import sys

from chowring.f4pipeline import run_f4_verification


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--eps", default="both", choices=("1", "-1", "both"))
    parser.add_argument("--json", action="store_true",
                        help="print the JSON report instead of text")
    parser.add_argument("--report", help="also write a JSON report here")
    parser.add_argument("--timings", action="store_true")
    args = parser.parse_args()

    report = run_f4_verification(args.eps)
    sys.stdout.write(report.to_json(timings=args.timings) if args.json
                     else report.to_text(timings=args.timings))
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.to_json(timings=args.timings))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
