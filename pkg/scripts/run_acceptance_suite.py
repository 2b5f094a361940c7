"""Run the ten acceptance criteria and print one line per criterion.

Usage: python3 scripts/run_acceptance_suite.py [--only 1,6,9] [--seed N] [--json out.json]
"""

import argparse
import dataclasses
import json
import sys

import mpmath

from classical_mops.acceptance import CRITERIA, AcceptanceConfig, run_criterion


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--only", help="comma-separated criterion numbers")
    parser.add_argument("--seed", type=int, default=AcceptanceConfig.seed)
    parser.add_argument("--json", help="also write a JSON summary here")
    args = parser.parse_args()

    cfg = dataclasses.replace(AcceptanceConfig(), seed=args.seed)
    numbers = [int(v) for v in args.only.split(",")] if args.only else range(1, len(CRITERIA) + 1)
    results = []
    for number in numbers:
        result = run_criterion(number, cfg)
        print(result.line(), flush=True)
        for failure in result.failures[:10]:
            print(f"    {failure}")
        results.append(result)
    if args.json:
        summary = [
            {
                "criterion": r.number,
                "name": r.name,
                "passed": r.passed,
                "worst": mpmath.nstr(r.worst, 6),
                "tolerance": r.tolerance,
                "seconds": round(r.seconds, 2),
            }
            for r in results
        ]
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
