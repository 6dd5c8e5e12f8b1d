#!/usr/bin/env python3
"""Print the verdict matrix: pure structure pairs against half-dimensions.

Rows are pair kinds, columns are geometries (m1, m2); cells abbreviate the
verdict: 0 identically-zero, X nonzero, C conditionally-zero.
"""

import argparse
import sys

from astheno.classify import scan

ABBREV = {"identically-zero": "0", "nonzero": "X", "conditionally-zero": "C"}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m1", type=int, default=3)
    ap.add_argument("--max-m2", type=int, default=3)
    ap.add_argument("--condition", default="astheno",
                    choices=("astheno", "skt", "gauduchon"))
    ap.add_argument("--convention", default="graded",
                    choices=("graded", "ungraded"))
    args = ap.parse_args()

    report = scan(
        max_m1=args.max_m1, max_m2=args.max_m2,
        condition=args.condition, convention=args.convention,
    )
    geoms = sorted({(c.m1, c.m2) for c in report.cells})
    pairs = []
    for cell in report.cells:
        key = (cell.factor1, cell.factor2)
        if key not in pairs:
            pairs.append(key)
    grid = {(c.factor1, c.factor2, c.m1, c.m2): ABBREV[c.verdict] for c in report.cells}

    label = max(len(f"{k1} x {k2}") for k1, k2 in pairs)
    header = " " * label + "  " + " ".join(f"{m1},{m2}" for m1, m2 in geoms)
    print(f"condition {args.condition}, convention {args.convention}")
    print(header)
    for k1, k2 in pairs:
        row = f"{k1} x {k2}".ljust(label) + "  "
        row += " ".join(grid[(k1, k2, m1, m2)].center(3) for m1, m2 in geoms)
        print(row.rstrip())
    for prop in report.propositions:
        state = "holds" if prop.holds else f"FAILS at {prop.counterexamples}"
        print(f"proposition {prop.name}: {state}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
