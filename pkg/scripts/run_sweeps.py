#!/usr/bin/env python3
"""Run every verification sweep at its full range and print a summary table.

    python scripts/run_sweeps.py [--jobs 4] [--json reports.json]
"""

import argparse
import json
import os
import sys

from twocolored import verify as vf


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--enum-max", type=int, default=vf.ENUMERATION_CAP)
    ap.add_argument("--series-max", type=int, default=vf.SERIES_CAP)
    ap.add_argument("--json", help="also write the reports to this file")
    args = ap.parse_args()

    reports = [
        vf.verify_theorem_E(args.enum_max, "enumeration", jobs=args.jobs),
        vf.verify_theorem_E(args.series_max, "series"),
        vf.verify_theorem_Q(args.enum_max, "enumeration", jobs=args.jobs),
        vf.verify_theorem_Q(args.series_max, "series"),
        vf.verify_franklin(40),
        vf.verify_bijection(5, 25),
        vf.verify_euler(500),
        vf.cross_check(40),
    ]
    print(vf.format_table(reports))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
