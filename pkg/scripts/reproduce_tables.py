#!/usr/bin/env python3
"""Reproduce the bundled case tables and summarize row statuses.

For each table the engine recomputes every row from the structure flags and
diffs it against the transcribed entry, under both differential conventions.
"""

import argparse
import sys
from collections import Counter

from astheno.calculus import Convention
from astheno.classify import reproduce_table
from astheno.exprio import print_text
from astheno.fixtures import table_ids


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--table", type=int, default=None, help="restrict to one id")
    ap.add_argument("--show-diffs", action="store_true")
    args = ap.parse_args()

    ids = [args.table] if args.table else list(table_ids())
    totals = Counter()
    clean = True
    for conv in (Convention.GRADED, Convention.UNGRADED):
        print(f"== convention: {conv.value} ==")
        for table_id in ids:
            report = reproduce_table(table_id, conv)
            counts = Counter(r.status for r in report.rows)
            totals.update(counts)
            summary = ", ".join(f"{k} x{v}" for k, v in sorted(counts.items()))
            print(f"table {table_id} (m1={report.m1}, m2={report.m2}): {summary}")
            for row in report.rows:
                if row.status != "discrepancy":
                    continue
                clean = False
                print(f"  row {row.row} ({row.factor1} x {row.factor2}): {row.note}")
                if args.show_diffs:
                    print(f"    fixture - engine = {print_text(row.diff)}")
    print("overall:", ", ".join(f"{k} x{v}" for k, v in sorted(totals.items())))
    return 0 if clean else 1


if __name__ == "__main__":
    sys.exit(main())
