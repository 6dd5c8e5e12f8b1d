#!/usr/bin/env python3
"""Run the full self-audit and print the ledger.

Exit 0 iff every hard check passes; findings are informational.
"""

import argparse
import json
import sys

from astheno.audit import DEFAULT_SEED, run_audit


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--json", action="store_true", help="dump the full payload")
    args = ap.parse_args()

    report = run_audit(seed=args.seed, trials=args.trials)
    if args.json:
        json.dump(report.to_payload(), sys.stdout, indent=2)
        print()
    else:
        for check in report.checks:
            print(f"{'pass' if check.passed else 'FAIL'}  {check.name}: {check.detail}")
        for finding in report.findings:
            print(f"note  {finding.name}: {finding.summary}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
